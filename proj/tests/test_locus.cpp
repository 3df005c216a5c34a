#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "locus_emitter/locus.hpp"

using namespace amen;
using V = std::vector<int>;

namespace {
SignedWord W(LieType t, V e) { return SignedWord(t, std::move(e)); }

int bound_at(const std::vector<RankCondition>& rc, int r, int s) {
  for (const auto& c : rc)
    if (c.r == r && c.s == s) return c.bound;
  return -1;
}
}  // namespace

TEST_CASE("rank conditions") {
  // identity: every bound is the generic one, so there is no condition
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : rank_conditions(identity(LieType::A, n), n))
      CHECK(c.bound == generic_bound(LieType::A, n, c.r, c.s));

  auto a = rank_conditions(W(LieType::A, {2, 1}), 2);
  CHECK(a.size() == 4);
  CHECK(bound_at(a, 1, 1) == 1);
  CHECK(bound_at(a, 1, 2) == 1);
  CHECK(bound_at(a, 2, 1) == 1);
  CHECK(bound_at(a, 2, 2) == 2);

  // zeta((-1)) = (2,1)
  auto c = rank_conditions(W(LieType::C, {-1}), 1);
  CHECK(c.size() == 2);
  CHECK(bound_at(c, 1, 1) == 1);
  CHECK(bound_at(c, 1, 2) == 1);

  auto d = rank_conditions(W(LieType::D, {2, 1, 3}), 3);
  CHECK(d.size() == 2 * 6);
  for (const auto& x : d) CHECK(x.equality);

  CHECK_THROWS_AS(rank_conditions(W(LieType::A, {2, 1, 3}), 2), std::invalid_argument);
  // padding to a larger rank is allowed
  CHECK(rank_conditions(W(LieType::C, {-1}), 3).size() == 18);
}

TEST_CASE("emitted formulas") {
  auto a = locus_formula(W(LieType::A, {2, 1}), 2);
  REQUIRE(a.terms.size() == 1);
  CHECK(render_sum(a.terms, LocusFormat::Plain) == "c_1(E - E_1 - F_1)");
  CHECK(a.row_degrees == V{1});

  auto c = locus_formula(W(LieType::C, {2, 4, 6, 5, -1, -3}), 6);
  CHECK(c.row_bundles == std::vector<std::pair<int, int>>{{1, 4}, {2, 6}, {3, 11}});
  std::string txt = emit(c.w, 6, LocusFormat::Plain);
  CHECK(txt.find("R^{(1,2)} c_(8,5,1)(E - E_{n-f} - F_{n+g}), f = (5,4,3), g = (-2,0,5)") != std::string::npos);
  CHECK(txt.find("c_8(E - E_1 - F_4)") != std::string::npos);
  std::string tex = emit(c.w, 6, LocusFormat::Latex);
  CHECK(tex.find("\\overline{1}") != std::string::npos);
  CHECK(tex.find("(1-R_{12})(1+R_{12})^{-1}(1-R_{13})(1-R_{23})") != std::string::npos);

  auto b = locus_formula(W(LieType::B, {-1}), 1);
  CHECK(b.prefactor == Rational(1, 2));
  CHECK(render_sum(b.terms, LocusFormat::Plain) == "c_1(E - E_1 - F_2)");  // f = (0), g = (0)

  auto d = locus_formula(identity(LieType::D, 3), 3);
  CHECK(render_sum(d.terms, LocusFormat::Plain) == "1");
  CHECK(emit(identity(LieType::D, 3), 3, LocusFormat::Plain).find("= 1\n") != std::string::npos);

  CHECK_THROWS_AS(locus_formula(W(LieType::A, {2, 1, 4, 3}), 4), std::invalid_argument);
  CHECK_THROWS_AS(locus_formula(W(LieType::D, {3, 2, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_locus_format("html"), std::invalid_argument);
}

TEST_CASE("type D rows use the half sums") {
  // (-2,-1,3) is 1-Grassmannian of type 2; its eta polynomial is bt[1]
  auto d = locus_formula(W(LieType::D, {-2, -1, 3}), 3);
  CHECK(render_sum(d.terms, LocusFormat::Plain) == "1/2 c_1(E - E_2 - F_3) - 1/2 c_1(E_3 - E_2)");
  CHECK(pullback(d) == theta_eta_abstract(d.w));
}

TEST_CASE("pulling the Chern classes back gives the flagged polynomials") {
  int checked = 0;
  for (LieType t : {LieType::B, LieType::C, LieType::D})
    for (int n = 1; n <= 3; ++n) {
      if (t == LieType::D && n < 2) continue;
      for (const auto& w : all_elements(t, n)) {
        if (!is_amenable(w)) continue;
        for (int rank : {n, n + 1}) {
          auto f = locus_formula(w, rank);
          CHECK_MESSAGE(pullback(f) == theta_eta_abstract(f.w), std::string(1, type_char(t)) << " " << w.pretty());
          ++checked;
        }
      }
    }
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_elements(LieType::A, n)) {
      if (!is_amenable(w)) continue;
      auto f = locus_formula(w, n);
      CHECK_MESSAGE(pullback(f) == apply_formula(f.w), w.pretty());
      ++checked;
    }
  CHECK(checked > 100);
}
