#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "weyl_core/weyl.hpp"

using namespace amen;

namespace {
using V = std::vector<int>;
SignedWord C(V e) { return SignedWord(LieType::C, std::move(e)); }
SignedWord D(V e) { return SignedWord(LieType::D, std::move(e)); }
SignedWord A(V e) { return SignedWord(LieType::A, std::move(e)); }
}  // namespace

TEST_CASE("parsing and validation") {
  CHECK(parse_word(LieType::C, "-5,3,-4,7,-1,-6,2").w == V{-5, 3, -4, 7, -1, -6, 2});
  CHECK(parse_word(LieType::A, " 2, 1 ").w == V{2, 1});
  CHECK_THROWS_AS(parse_word(LieType::A, "1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(LieType::D, "-1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(LieType::C, "1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(LieType::C, "1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(LieType::C, "1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(LieType::C, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(LieType::C, "1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("E"), std::invalid_argument);
}

TEST_CASE("length") {
  CHECK(length(identity(LieType::C, 5)) == 0);
  CHECK(length(C({-5, 3, -4, 7, -1, -6, 2})) == 26);
  for (int n = 1; n <= 6; ++n) CHECK(length(longest_element(LieType::C, n)) == n * n);
  for (int n = 2; n <= 6; ++n) CHECK(length(longest_element(LieType::D, n)) == n * (n - 1));
  CHECK(length(longest_element(LieType::A, 5)) == 10);
}

TEST_CASE("length agrees with word length along random reduced walks") {
  std::mt19937_64 rng(7);
  for (LieType t : {LieType::A, LieType::C, LieType::D}) {
    for (int n = 2; n <= 5; ++n) {
      auto gens = simple_reflections(t, n);
      for (int trial = 0; trial < 30; ++trial) {
        SignedWord w = identity(t, n);
        for (int step = 0; step < 12; ++step) {
          int i = gens[rng() % gens.size()];
          SignedWord v = right_mult(w, i);
          int d = length(v) - length(w);
          CHECK((d == 1 || d == -1));
          w = v;
        }
        CHECK(inverse(inverse(w)) == w);
        CHECK(length(inverse(w)) == length(w));
        CHECK(compose(w, inverse(w)).is_identity());
      }
    }
  }
}

TEST_CASE("descents") {
  CHECK(descents(A({2, 1}), DescentSide::Right) == std::set<int>{1});
  CHECK(first_descent(C({2, 4, 6, 5, -1, -3})) == 3);
  auto d = descents(D({3, 2, 1}), DescentSide::Right);
  CHECK(d == std::set<int>{1, 2});
  CHECK(right_mult(C({1, 2}), 0).w == V{-1, 2});
  CHECK(left_mult(0, C({2, 1})).w == V{2, -1});
  CHECK_THROWS_AS(right_mult(A({1, 2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(right_mult(C({1, 2}), kSBox), std::invalid_argument);
  CHECK_THROWS_AS(right_mult(C({1, 2}), 2), std::invalid_argument);
}

TEST_CASE("right descent criteria match brute force") {
  for (LieType t : {LieType::A, LieType::C, LieType::D}) {
    for (const auto& w : all_elements(t, 4)) {
      auto r = descents(w, DescentSide::Right);
      for (int i = 1; i < 4; ++i) CHECK(r.count(i) == (w[i] > w[i + 1] ? 1u : 0u));
      if (t == LieType::C) CHECK(r.count(0) == (w[1] < 0 ? 1u : 0u));
      if (t == LieType::D) CHECK(r.count(kSBox) == (w[1] + w[2] < 0 ? 1u : 0u));
    }
  }
}

TEST_CASE("box left descents follow the three listed patterns") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_elements(LieType::D, n)) {
      bool brute = length(left_mult(kSBox, w)) < length(w);
      CHECK(brute == box_left_descent_by_pattern(w));
    }
}

TEST_CASE("left descents at i>0 follow the four listed patterns") {
  for (const auto& w : all_elements(LieType::C, 4)) {
    auto l = descents(w, DescentSide::Left);
    auto pos = [&](int a) {
      for (int j = 1; j <= 4; ++j)
        if (std::abs(w[j]) == a) return j;
      return 0;
    };
    for (int i = 1; i < 4; ++i) {
      int pi = pos(i), pj = pos(i + 1);
      int vi = w[pi], vj = w[pj];
      bool pat = (pj < pi && vj > 0 && vi > 0) || (pi < pj && vi > 0 && vj < 0) ||
                 (pj < pi && vj < 0 && vi > 0) || (pi < pj && vi < 0 && vj < 0);
      CHECK(pat == (l.count(i) == 1));
    }
    CHECK((l.count(0) == 1) == (w[pos(1)] < 0));
  }
}

TEST_CASE("A-codes") {
  CHECK(a_code(C({-5, 3, -4, 7, -1, -6, 2})) == V{1, 4, 1, 3, 1, 0, 0});
  CHECK(a_code(identity(LieType::C, 4)) == V{0, 0, 0, 0});
  CHECK(a_code(D({3, 2, -7, 1, 5, 4, -6})) == V{4, 3, 0, 1, 2, 1, 0});
}

TEST_CASE("code reshuffle under right descents") {
  for (LieType t : {LieType::A, LieType::C, LieType::D}) {
    for (const auto& w : (t == LieType::A ? all_elements(t, 5) : all_elements(t, 4))) {
      auto g = a_code(w);
      for (int i = 1; i < w.n(); ++i) {
        if (g[i - 1] <= g[i]) {
          CHECK(w[i] < w[i + 1]);
          continue;
        }
        CHECK(w[i] > w[i + 1]);
        SignedWord v = right_mult(w, i);
        CHECK(length(v) == length(w) - 1);
        auto expect = g;
        expect[i - 1] = g[i];
        expect[i] = g[i - 1] - 1;
        CHECK(a_code(v) == expect);
      }
    }
  }
}

TEST_CASE("shape examples") {
  SUBCASE("type C signed permutation") {
    auto s = shape(C({-5, 3, -4, 7, -1, -6, 2}));
    CHECK(s.mu == V{6, 5, 4, 1});
    CHECK(s.nu == V{5, 2, 2, 1});
    CHECK(s.lambda == V{11, 7, 6, 2});
  }
  SUBCASE("type C leading element") {
    auto s = shape(C({2, 4, 6, 5, -1, -3}));
    CHECK(s.k == 3);
    CHECK(s.gamma == V{2, 2, 3, 2, 1, 0});
    CHECK(s.mu == V{3, 1});
    CHECK(s.nu == V{5, 4, 1});
    CHECK(s.xi == V{2, 1});
    CHECK(s.lambda == V{8, 5, 1});
    CHECK(s.beta == V{-2, 0, 5});
    CHECK(s.denom_set == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(s.f_flag == V{5, 4, 3});
  }
  SUBCASE("type A") {
    auto s = shape(A({3, 4, 6, 1, 5, 2}));
    CHECK(s.gamma == V{2, 2, 3, 0, 1, 0});
    CHECK(s.lambda == V{3, 2, 2, 1});
    CHECK(s.f_flag == V{3, 3, 3, 5});
    CHECK(s.g_flag == V{5, 2, 2, 2});
  }
  SUBCASE("type D") {
    SignedWord w = D({3, 2, -7, 1, 5, 4, -6});
    auto s = shape(w);
    CHECK(s.mu == V{6, 5});
    CHECK(s.nu == V{5, 3, 2, 1});
    CHECK(s.lambda == V{11, 8, 2, 1});
    CHECK(s.d_type == 1);
    CHECK(s.k == 1);
    SignedWord iw = iota(w);
    CHECK(iw.w == V{-3, 2, -7, -1, 5, 4, -6});
    auto si = shape(iw);
    CHECK(si.lambda == V{11, 8, 2, 1});
    CHECK(si.d_type == 2);
    CHECK(si.k == 1);
  }
  SUBCASE("321 in type D") {
    auto s = shape(D({3, 2, 1}));
    CHECK(s.d_type == 1);
    CHECK(s.ell == 2);
    CHECK(s.mu.empty());
    CHECK(s.lambda == V{2, 1});
    CHECK(s.m == 0);
    CHECK(s.k == 1);
    CHECK(s.beta == V{1, 2});
    CHECK(s.denom_set.empty());
    CHECK_FALSE(is_proper(D({3, 2, 1})));
  }
  SUBCASE("identity") {
    auto s = shape(identity(LieType::C, 3));
    CHECK(s.lambda.empty());
    CHECK(s.f_flag.empty());
    CHECK(s.g_flag.empty());
  }
}

TEST_CASE("iota") {
  std::mt19937_64 rng(3);
  auto all = all_elements(LieType::D, 4);
  for (const auto& w : all) {
    CHECK(iota(iota(w)) == w);
    int t = d_type(w), ti = d_type(iota(w));
    if (t == 0) CHECK(iota(w) == w);
    else CHECK(t + ti == 3);
    CHECK(length(iota(w)) == length(w));
  }
  CHECK_THROWS_AS(iota(C({1, 2})), std::invalid_argument);
}

TEST_CASE("size of lambda equals length, exhaustively in rank 4") {
  for (LieType t : {LieType::C, LieType::D, LieType::A}) {
    for (const auto& w : all_elements(t, 4)) {
      auto s = shape(w);
      int sum = 0;
      for (int x : s.lambda) sum += x;
      CHECK(sum == length(w));
      if (t == LieType::A) continue;
      // lambda = phi + xi + mu
      size_t len = std::max({s.phi.size(), s.xi.size(), s.mu.size(), s.lambda.size()});
      for (size_t i = 0; i < len; ++i) {
        auto at = [&](const V& v) { return i < v.size() ? v[i] : 0; };
        CHECK(at(s.lambda) == at(s.phi) + at(s.xi) + at(s.mu));
      }
      for (size_t i = 0; i + 1 < s.beta.size(); ++i) CHECK(s.beta[i] < s.beta[i + 1]);
      // denominator set is an order ideal
      for (auto [i, j] : s.denom_set) {
        if (i > 1) CHECK(std::count(s.denom_set.begin(), s.denom_set.end(), std::make_pair(i - 1, j)) == 1);
        if (j > i + 1) CHECK(std::count(s.denom_set.begin(), s.denom_set.end(), std::make_pair(i, j - 1)) == 1);
      }
    }
  }
}

TEST_CASE("statistics are stable under padding") {
  for (LieType t : {LieType::C, LieType::D}) {
    for (const auto& w : all_elements(t, 3)) {
      if (w.is_identity()) continue;
      auto s = shape(w), sp = shape(pad(w, 5));
      CHECK(length(w) == length(pad(w, 5)));
      CHECK(s.lambda == sp.lambda);
      CHECK(s.k == sp.k);
      CHECK(s.xi == sp.xi);
      CHECK(s.f_flag == sp.f_flag);
      CHECK(s.g_flag == sp.g_flag);
      CHECK(is_amenable(w) == is_amenable(pad(w, 5)));
    }
  }
}

TEST_CASE("grassmannianize") {
  CHECK(grassmannianize(C({2, 4, 7, 5, 8, -3, 1, -6}), 3).w == V{2, 4, 7, -6, -3, 1, 5, 8});
  CHECK(grassmannianize(D({-2, 4, 7, 5, -8, -3, 1, -6}), 3).w == V{-2, 4, 7, -8, -6, -3, 1, 5});
  CHECK(grassmannianize(C({1, 3, -2}), 2).w == V{1, 3, -2});
  CHECK_THROWS_AS(grassmannianize(C({3, 1, 2}), 2), std::invalid_argument);
  for (const auto& w : all_elements(LieType::C, 4)) {
    for (int k = 0; k <= 4; ++k) {
      if (!increasing_up_to(w, k)) continue;
      auto v = grassmannianize(w, k);
      auto sw = shape_at(w, k), sv = shape_at(v, k);
      CHECK(sw.beta == sv.beta);
      int tail = 0;
      for (int x : sw.trunc_code) tail += x;
      CHECK(length(v) == length(w) - tail);
    }
  }
}

TEST_CASE("lemma on grassmannian lifts, exhaustively") {
  for (LieType t : {LieType::C, LieType::D}) {
    auto all = all_elements(t, 4);
    auto gens = simple_reflections(t, 4);
    for (const auto& w : all) {
      for (int k = (t == LieType::D ? 1 : 0); k <= 4; ++k) {
        if (!increasing_up_to(w, k)) continue;
        auto cw = shape_at(w, k).trunc_code;
        SignedWord vw = grassmannianize(w, k);
        for (int i : gens) {
          SignedWord target = left_mult(i, vw);
          // wbar must share the head and truncated code, with v(wbar) = s_i v(w)
          for (const auto& wb : all) {
            if (length(wb) + 1 != length(w)) continue;
            if (!increasing_up_to(wb, k)) continue;
            if (!(grassmannianize(wb, k) == target)) continue;
            if (shape_at(wb, k).trunc_code != cw) continue;
            CHECK(wb == left_mult(i, w));
          }
        }
      }
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(C({2, 4, 6, 5, -1, -3})).leading);
  CHECK_FALSE(classify(D({3, 2, 1})).proper);
  auto c = classify(identity(LieType::C, 4));
  CHECK(c.dominant);
  CHECK(c.leading);
  CHECK(c.proper);
  CHECK(classify(C({1, 3, -2})).grassmannian == 2);
  CHECK(classify(A({2, 1, 4, 3})).vexillary == false);
}

TEST_CASE("amenable decomposition in type A") {
  auto m = amenable_decompose(A({1, 4, 2, 5, 6, 3}));
  REQUIRE(m.has_value());
  CHECK(m->base.w == V{4, 5, 6, 2, 1, 3});
  CHECK(m->reduced_word == V{4, 3, 2, 1, 4, 3});
  CHECK(word_to_string(m->reduced_word) == "s4s3s2s1s4s3");
  CHECK_FALSE(amenable_decompose(A({2, 1, 4, 3})).has_value());
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_elements(LieType::A, n)) {
      auto d = amenable_decompose(w);
      CHECK(d.has_value() == is_vexillary(w));
      CHECK(is_amenable(w) == d.has_value());
      if (!d) continue;
      CHECK(is_dominant(d->base));
      CHECK(compose(d->base, d->omega) == w);
      CHECK(length(w) == length(d->base) - length(d->omega));
      CHECK(avoids_pattern(d->omega.w, {2, 3, 1}));
      CHECK(static_cast<int>(d->reduced_word.size()) == length(d->omega));
    }
}

TEST_CASE("amenable decomposition in types C and D") {
  auto m = amenable_decompose(C({2, 4, 6, 5, -1, -3}));
  REQUIRE(m.has_value());
  CHECK(m->omega.is_identity());
  CHECK(m->k == 3);
  for (LieType t : {LieType::C, LieType::D}) {
    for (const auto& w : all_elements(t, 4)) {
      auto d = amenable_decompose(w);
      if (is_leading(w)) CHECK(d.has_value());
      if (!d) continue;
      CHECK(is_leading(d->base));
      SignedWord om = d->omega;
      om.type = t;
      CHECK(compose(om, d->base) == w);
      CHECK(length(w) == length(d->base) - length(om));
      for (size_t p = 0; p + 1 < d->R.size(); ++p)
        for (int s : d->R[p]) CHECK(std::count(d->R[p + 1].begin(), d->R[p + 1].end(), s) == 1);
    }
  }
}

TEST_CASE("zeta embeddings") {
  CHECK(zeta_embed(C({1}), ZetaFlavor::C) == V{1, 2});
  CHECK(zeta_embed(C({-1}), ZetaFlavor::C) == V{2, 1});
  CHECK_THROWS_AS(zeta_embed(A({1}), ZetaFlavor::C), std::invalid_argument);
  for (const auto& w : all_elements(LieType::C, 3)) {
    auto z = zeta_embed(w, ZetaFlavor::C);
    for (int i = 0; i < 6; ++i) CHECK(z[i] + z[5 - i] == 7);
    auto zb = zeta_embed(w, ZetaFlavor::B);
    for (int i = 0; i < 7; ++i) CHECK(zb[i] + zb[6 - i] == 8);
    V sorted = z;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == V{1, 2, 3, 4, 5, 6});
  }
  // homomorphism: zeta(uv) = zeta(u) zeta(v)
  auto all = all_elements(LieType::C, 3);
  for (size_t a = 0; a < all.size(); a += 7)
    for (size_t b = 0; b < all.size(); b += 5) {
      auto zu = zeta_embed(all[a], ZetaFlavor::C), zv = zeta_embed(all[b], ZetaFlavor::C);
      auto zuv = zeta_embed(compose(all[a], all[b]), ZetaFlavor::C);
      V prod(6);
      for (int i = 0; i < 6; ++i) prod[i] = zu[zv[i] - 1];
      CHECK(prod == zuv);
    }
}
