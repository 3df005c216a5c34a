#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flagged_formulas/formulas.hpp"

using namespace amen;
using V = std::vector<int>;

namespace {
SignedWord W(LieType t, V e) { return SignedWord(t, std::move(e)); }
}  // namespace

TEST_CASE("raising expansion with one denominator pair") {
  auto terms = expand_RD({{1, 2}}, 3, {2, 1, 1});
  auto col = collect_by_index(terms);
  std::map<V, int64_t> nonzero;
  for (auto& [k, c] : col)
    if (c) nonzero[k] = c;
  CHECK(nonzero == std::map<V, int64_t>{{{2, 1, 1}, 1}, {{3, 0, 1}, -2}, {{3, 1, 0}, 1}, {{2, 2, 0}, -1}});
  // R12^2 and R12 R13 both reach (4,0,0) and cancel
  int hits = 0;
  for (const auto& t : terms) hits += t.index == V{4, 0, 0};
  CHECK(hits == 2);
  CHECK(col.count({4, 0, 0}) == 0);
  CHECK(raising_label({{1, 2}}, 3) == "(1-R12)/(1+R12)(1-R13)(1-R23)");
}

TEST_CASE("plan descriptions") {
  auto c = plan_formula(W(LieType::C, {2, 4, 6, 5, -1, -3}));
  CHECK(c.describe() == "R^{(1,2)} ^{(5,4,3)}c^{(-2,0,5)}_{(8,5,1)}");
  auto cf = plan_formula(W(LieType::C, {2, 4, 6, 5, -1, -3}), FormulaForm::Factorial);
  CHECK(cf.describe() == c.describe());
  auto a = plan_formula(W(LieType::A, {3, 4, 6, 1, 5, 2}));
  CHECK(a.describe() == "R^∅ ^{(3,3,3,5)}h^{(5,2,2,2)}_{(3,2,2,1)}");
  auto ap = plan_formula(W(LieType::A, {1, 4, 2, 5, 6, 3}), FormulaForm::Proposition);
  CHECK(ap.describe() == "R^∅ ^{(2,4,5)}h^{(3,3,3)}_{(2,1,1)}");
  CHECK(ap.degree() == 4);
  CHECK_THROWS_AS(plan_formula(W(LieType::A, {2, 1, 4, 3})), std::invalid_argument);
}

TEST_CASE("abstract theta in degree one") {
  CHECK(theta_eta_abstract(W(LieType::C, {-1, 2})).str() == "c[0,1]");
  CHECK(theta_eta_abstract(W(LieType::D, {-2, -1, 3})).str() == "bt[1]");
  CHECK_THROWS_AS(theta_eta_abstract(W(LieType::A, {2, 1})), std::invalid_argument);
}
