#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ring/actions.hpp"
#include "ring/blocks.hpp"
#include "ring/relations.hpp"

using namespace amen;

namespace {

QPoly x(int i) { return QPoly::var(xv(i)); }
QPoly y(int i) { return QPoly::var(yv(i)); }
QPoly c(int p) { return detail::gen_c<Rational>(p); }
QPoly b(int p) { return p == 0 ? QPoly::constant(1) : QPoly::var(bv(p)); }

QPoly random_poly(std::mt19937_64& rng, int nx, int ny, int maxc, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-3, 3), var(0, nx + ny + maxc - 1), deg(0, maxdeg);
  QPoly f;
  for (int t = 0; t < terms; ++t) {
    QPoly m = QPoly::constant(coef(rng));
    for (int d = deg(rng); d > 0; --d) {
      int v = var(rng);
      if (v < nx)
        m *= x(v + 1);
      else if (v < nx + ny)
        m *= y(v - nx + 1);
      else
        m *= c(v - nx - ny + 1);
    }
    f += m;
  }
  return f;
}

}  // namespace

TEST_CASE("poly arithmetic and rendering") {
  QPoly f = (x(1) + y(1)) * (x(1) - y(1));
  CHECK(f == x(1) * x(1) - y(1) * y(1));
  CHECK(f.str() == "x1^2 - y1^2");
  CHECK((c(2) * Rational(1, 2) + x(1)).str() == "1/2*c2 + x1");
  CHECK(QPoly().str() == "0");
  CHECK(f.degree() == 2);
  CHECK((x(1) + 1 * QPoly::constant(3)).pow(3).constant_term() == 27);
}

TEST_CASE("exact division by a linear form") {
  QPoly f = (x(1) - x(2)) * (x(1) * x(1) + y(2));
  QPoly q = divide_linear(f, xv(1), Rational(1), std::optional<Var>(xv(2)), Rational(-1));
  CHECK(q == x(1) * x(1) + y(2));
  CHECK_THROWS_AS(divide_linear(x(1) + QPoly::constant(1), xv(1), Rational(1), std::nullopt, Rational(0)),
                  std::domain_error);
}

TEST_CASE("symmetric functions with the sign convention") {
  CHECK(sym_func<Rational>(SymKind::E, 2, 2, Alphabet::X) == x(1) * x(2));
  CHECK(sym_func<Rational>(SymKind::H, 1, 2, Alphabet::NegY) == y(1) * y(1));
  CHECK(sym_func<Rational>(SymKind::H, -2, 1, Alphabet::X) == x(1) + x(2));
  CHECK(sym_func<Rational>(SymKind::E, 0, 0, Alphabet::X) == QPoly::constant(1));
  CHECK(sym_func<Rational>(SymKind::E, 0, 1, Alphabet::X).is_zero());
}

TEST_CASE("building blocks") {
  PolyEnv<Rational> env(CMode::FreeC);
  Blocks<QPoly> bl(env);
  CHECK(bl.h(1, 1, 1) == x(1) - y(1));
  for (int p = 0; p <= 4; ++p) CHECK(bl.c(0, 0, p) == c(p));
  for (int r = -2; r <= 2; ++r)
    for (int s = -2; s <= 2; ++s) CHECK(bl.c(r, s, 0) == QPoly::constant(1));
}

TEST_CASE("Weyl actions") {
  CHECK(weyl_act(Flavor::A, 1, Side::X, x(1)) == x(2));
  CHECK(weyl_act(Flavor::BC, 0, Side::X, c(1)) == c(1) + x(1) * Rational(2));
  for (int p = 1; p <= 6; ++p) {
    CHECK(weyl_act(Flavor::BC, 0, Side::X, weyl_act(Flavor::BC, 0, Side::X, c(p))) == c(p));
    CHECK(weyl_act(Flavor::D, kBox, Side::X, weyl_act(Flavor::D, kBox, Side::X, b(p))) == b(p));
  }
  CHECK_THROWS_AS(weyl_act(Flavor::BC, kBox, Side::X, x(1)), std::invalid_argument);
  CHECK_THROWS_AS(weyl_act(Flavor::A, 0, Side::X, x(1)), std::invalid_argument);
  CHECK(ddiff(Flavor::A, 1, Side::X, x(1)) == QPoly::constant(1));
}

TEST_CASE("relations vanish after specialization") {
  RelationContext ctx{Flavor::BC, 12, 0, 1};
  for (int p = 1; p <= 4; ++p) CHECK(eq_mod_relations(ctx, relation_c(p), QPoly()));
  RelationContext dctx{Flavor::D, 12, 0, 1};
  for (int p = 1; p <= 4; ++p) CHECK(eq_mod_relations(dctx, relation_b(p), QPoly()));
  for (int p = 1; p <= 3; ++p) {
    CHECK(specialize_z(relation_c(p), 2 * p).is_zero());
    CHECK(specialize_z(relation_b(p), 2 * p).is_zero());
  }
  CHECK_FALSE(eq_mod_relations(ctx, c(1) * c(1), QPoly()));
  RelationContext rnd{Flavor::BC, 12, kDefaultPrime, 7};
  CHECK(eq_mod_relations(rnd, relation_c(3), QPoly()));
  CHECK_FALSE(eq_mod_relations(rnd, c(3), QPoly()));
}

TEST_CASE("Leibniz rule and nilpotency on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    QPoly f = random_poly(rng, 3, 2, 3, 5, 3), g = random_poly(rng, 3, 2, 3, 5, 3);
    for (int i : {0, 1, 2}) {
      QPoly lhs = ddiff(Flavor::BC, i, Side::X, f * g);
      QPoly rhs = ddiff(Flavor::BC, i, Side::X, f) * g +
                  weyl_act(Flavor::BC, i, Side::X, f) * ddiff(Flavor::BC, i, Side::X, g);
      CHECK(lhs == rhs);
      CHECK(ddiff(Flavor::BC, i, Side::X, ddiff(Flavor::BC, i, Side::X, f)).is_zero());
    }
  }
}
