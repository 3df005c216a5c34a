// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flagged_formulas/formulas.hpp"
#include "ring/relations.hpp"
#include "schubert_oracle/oracle.hpp"
#include "verify/lemmas.hpp"
#include "verify/report.hpp"
#include "vexillary/vexillary.hpp"
#include "weyl_core/weyl.hpp"

using namespace amen;
using V = std::vector<int>;

namespace {

// Pinned tolerances.
constexpr int kErrorBits = 80;  // randomized comparisons: error below 2^-80
constexpr int kLemmaTrials = 100;
constexpr int kMinSampleA6 = 500, kMinSampleW4 = 200, kMinSampleD4 = 100;

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;
  void fail(const std::string& s) {
    ok = false;
    details.push_back("FAIL " + s);
  }
  void info(const std::string& s) { details.push_back(s); }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

std::string type_n(LieType t, int n) {
  const char* group = t == LieType::A ? "S_" : t == LieType::D ? "W~_" : "W_";
  return std::string(group) + std::to_string(n) + " (" + type_char(t) + ")";
}

// Runs a sweep and records counts; randomized failures carry the exact verdict.
void sweep_into(Outcome& out, LieType t, int n, bool exact, int min_count, bool all_forms = true) {
  SweepConfig cfg;
  cfg.type = t;
  cfg.n = n;
  cfg.exact = exact;
  cfg.all_forms = all_forms;
  Report rep = sweep(cfg);
  std::set<std::string> bad;
  for (const auto& c : rep.cases)
    if (!c.passed()) {
      std::string s = c.label + " [" + c.form + "]";
      if (c.exact_recheck) s += *c.exact_recheck ? " (exact recheck equal)" : " (exact recheck unequal)";
      out.fail(type_n(t, n) + " " + s);
      bad.insert(c.label);
    }
  std::ostringstream os;
  os << type_n(t, n) << ": " << rep.amenable << " amenable, " << rep.cases.size() << " comparisons ("
     << (exact ? "exact" : "randomized, " + std::to_string(rep.config.value("trials", 0)) + " y draws") << "), "
     << rep.failed() << " failed on " << bad.size() << " elements";
  out.info(os.str());
  if (rep.amenable < min_count)
    out.fail(type_n(t, n) + ": only " + std::to_string(rep.amenable) + " elements, need " + std::to_string(min_count));
}

Outcome criterion1() {
  Outcome out;
  for (int n = 1; n <= 6; ++n) {
    int count = 0, bad = 0;
    for (const auto& w : amenable_elements(LieType::A, n)) {
      ++count;
      // literal equality in Q[X,Y]
      if (!(evaluate_plan(plan_formula(w), CMode::None) == schubert(w))) {
        ++bad;
        out.fail("S_" + std::to_string(n) + " " + w.pretty());
      }
    }
    out.info("S_" + std::to_string(n) + ": " + std::to_string(count) + " vexillary, " + std::to_string(bad) +
             " unequal (exact)");
    if (n == 6 && count < kMinSampleA6) out.fail("S_6 below the sample size");
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  sweep_into(out, LieType::C, 3, true, 1);
  sweep_into(out, LieType::C, 3, false, 1);
  sweep_into(out, LieType::C, 4, false, kMinSampleW4);
  return out;
}

Outcome criterion3() {
  Outcome out;
  // B = 2^{-s(w)} C at the level of the oracle
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : all_elements(LieType::B, n)) {
      SignedWord c = w;
      c.type = LieType::C;
      mpz_class d = 1;
      d <<= num_negative(w);
      if (!(schubert(w) == schubert(c) * Rational(mpz_class(1), d))) out.fail("scaling at " + w.pretty());
    }
  {
    PrimeScope ps(kDefaultPrime);
    FpOracle o(CMode::PowerSum, draw_y(5, 5));
    const Fp half = Field<Fp>::from_rational(Rational(1, 2));
    int count = 0;
    for (const auto& w : all_elements(LieType::B, 4)) {
      SignedWord c = w;
      c.type = LieType::C;
      Fp scale(1);
      for (int i = 0; i < num_negative(w); ++i) scale *= half;
      if (!(o.schubert(w) == o.schubert(c) * scale)) out.fail("scaling at " + w.pretty() + " (randomized)");
      ++count;
    }
    out.info("scaling by 2^-s(w): W_1..W_3 exact, W_4 " + std::to_string(count) + " elements randomized");
  }
  sweep_into(out, LieType::B, 3, true, 1);
  sweep_into(out, LieType::B, 3, false, 1);
  sweep_into(out, LieType::B, 4, false, kMinSampleW4);
  return out;
}

Outcome criterion4() {
  Outcome out;
  sweep_into(out, LieType::D, 2, true, 1);
  sweep_into(out, LieType::D, 3, true, 1);
  sweep_into(out, LieType::D, 3, false, 1);
  sweep_into(out, LieType::D, 4, false, kMinSampleD4);
  return out;
}

Outcome criterion5() {
  Outcome out;
  for (int n = 1; n <= 7; ++n) {
    int total = 0, agree = 0;
    for (const auto& w : all_elements(LieType::A, n)) {
      ++total;
      const bool vex = is_vexillary(w);
      if (vex == is_amenable(w) && vex == vexillary_test(a_code(w))) ++agree;
      else out.fail("vexillary vs amenable at " + w.pretty());
      if (n > 6 || !vex) continue;
      CanonicalOmega c = canonical_omega(w);
      out.expect(is_dominant(c.product), "omega product not dominant at " + w.pretty());
      out.expect(length(c.product) == length(w) + length(c.omega), "length additivity at " + w.pretty());
      out.expect(compose(w, c.omega) == c.product, "product mismatch at " + w.pretty());
      out.expect(tableau_T(w).omega_word == c.word, "tableau word differs from omega at " + w.pretty());
    }
    out.info("S_" + std::to_string(n) + ": " + std::to_string(agree) + "/" + std::to_string(total) + " agree" +
             (n <= 6 ? ", canonical omega postconditions checked" : ""));
  }
  return out;
}

SignedWord W(LieType t, V e) { return SignedWord(t, std::move(e)); }

Outcome criterion6() {
  Outcome out;
  int checks = 0;
  auto check = [&](bool cond, const std::string& what) {
    ++checks;
    out.expect(cond, what);
  };

  // type C code example
  {
    SignedWord w = W(LieType::C, {-5, 3, -4, 7, -1, -6, 2});
    check(a_code(w) == V{1, 4, 1, 3, 1, 0, 0}, "A-code of (-5,3,-4,7,-1,-6,2)");
    check(shape(w).lambda == V{11, 7, 6, 2}, "shape of (-5,3,-4,7,-1,-6,2)");
    check(length(w) == 26, "length of (-5,3,-4,7,-1,-6,2)");
  }
  // type A examples
  {
    SignedWord w = W(LieType::A, {1, 4, 2, 5, 6, 3});
    auto m = amenable_decompose(w);
    check(m && m->base.w == V{4, 5, 6, 2, 1, 3} && word_to_string(m->reduced_word) == "s4s3s2s1s4s3",
          "modification of (1,4,2,5,6,3)");
    check(a_code(w) == V{0, 2, 0, 1, 1, 0} && shape(w).lambda == V{2, 1, 1}, "code and shape of (1,4,2,5,6,3)");
    check(plan_formula(w, FormulaForm::Proposition).describe() == "R^∅ ^{(2,4,5)}h^{(3,3,3)}_{(2,1,1)}",
          "formula of (1,4,2,5,6,3)");
    SignedWord v = W(LieType::A, {3, 4, 6, 1, 5, 2});
    ShapeData s = shape(v);
    check(s.gamma == V{2, 2, 3, 0, 1, 0} && s.lambda == V{3, 2, 2, 1} && s.f_flag == V{3, 3, 3, 5} &&
              s.g_flag == V{5, 2, 2, 2},
          "shape and flags of (3,4,6,1,5,2)");
    check(plan_formula(v).describe() == "R^∅ ^{(3,3,3,5)}h^{(5,2,2,2)}_{(3,2,2,1)}", "formula of (3,4,6,1,5,2)");
  }
  // procedure trace
  {
    SignedWord base = W(LieType::A, {5, 6, 7, 4, 3, 8, 2, 1});
    check(a_code(base) == V{4, 4, 4, 3, 2, 2, 1, 0}, "code of (5,6,7,4,3,8,2,1)");
    const V word = {7, 6, 5, 4, 3, 2, 7, 6, 5, 4, 6, 5};
    check(compose(base, from_word(LieType::A, 8, word)).w == V{5, 1, 6, 2, 3, 7, 4, 8}, "product in the trace");
    auto moves = procedure_moves(base, word);
    std::vector<std::pair<int, int>> iv;
    std::vector<V> codes;
    for (const auto& m : moves) iv.push_back({m.i, m.j}), codes.push_back(m.after);
    check(iv == std::vector<std::pair<int, int>>{{2, 8}, {4, 8}, {5, 7}}, "move intervals of the trace");
    check(codes == std::vector<V>{{4, 0, 3, 3, 2, 1, 1, 0}, {4, 0, 3, 0, 2, 1, 0, 0}, {4, 0, 3, 0, 0, 1, 0, 0}},
          "codes along the trace");
  }
  // leading element of type C
  {
    SignedWord w = W(LieType::C, {2, 4, 6, 5, -1, -3});
    ShapeData s = shape(w);
    check(classify(w).leading && first_descent(w) == 3, "leading element and first descent");
    check(s.mu == V{3, 1} && s.nu == V{5, 4, 1} && s.xi == V{2, 1} && s.lambda == V{8, 5, 1} &&
              s.beta == V{-2, 0, 5} && s.denom_set == std::vector<std::pair<int, int>>{{1, 2}},
          "shape data of (2,4,6,5,-1,-3)");
    check(plan_formula(w).describe() == "R^{(1,2)} ^{(5,4,3)}c^{(-2,0,5)}_{(8,5,1)}", "formula of the leading element");
    check(grassmannianize(W(LieType::C, {2, 4, 7, 5, 8, -3, 1, -6}), 3).w == V{2, 4, 7, -6, -3, 1, 5, 8},
          "k-Grassmannian reordering in type C");
  }
  // type D example
  {
    SignedWord w = W(LieType::D, {3, 2, -7, 1, 5, 4, -6});
    ShapeData s = shape(w);
    check(a_code(w) == V{4, 3, 0, 1, 2, 1, 0}, "A-code of (3,2,-7,1,5,4,-6)");
    check(s.mu == V{6, 5} && s.nu == V{5, 3, 2, 1} && s.lambda == V{11, 8, 2, 1} && s.d_type == 1 && s.k == 1,
          "shape data of (3,2,-7,1,5,4,-6)");
    check(iota(w).w == V{-3, 2, -7, -1, 5, 4, -6}, "iota of (3,2,-7,1,5,4,-6)");
    check(grassmannianize(W(LieType::D, {-2, 4, 7, 5, -8, -3, 1, -6}), 3).w == V{-2, 4, 7, -8, -6, -3, 1, 5},
          "k-Grassmannian reordering in type D");
    SignedWord e = W(LieType::D, {3, 2, 1});
    ShapeData se = shape(e);
    check(!is_proper(e) && se.d_type == 1 && se.lambda == V{2, 1} && se.beta == V{1, 2} && se.k == 1 &&
              se.denom_set.empty(),
          "shape data of (3,2,1)");
    check(iota(e).w == V{-3, 2, -1} && shape(iota(e)).d_type == 2 && shape(iota(e)).beta == V{0, 2} &&
              !is_proper(iota(e)),
          "shape data of (-3,2,-1)");
  }
  // vexillary worked example and its tableau
  {
    SignedWord w = W(LieType::A, {1, 3, 6, 7, 9, 4, 8, 2, 5});
    CanonicalOmega c = canonical_omega(w);
    check(word_to_string(c.word) == "s4s3s4s6s2s3s4s5s6s1s2s3s4s5s6", "canonical omega word");
    check(c.product.w == V{9, 7, 6, 8, 4, 3, 1, 2, 5} && a_code(c.product) == V{8, 6, 5, 5, 3, 2, 0, 0, 0},
          "dominant product and its code");
    TableauT t = tableau_T(w);
    check(t.lambda == V{4, 3, 3, 2, 1, 1} && V(t.gamma_hat.begin(), t.gamma_hat.begin() + 8) == V{0, 2, 5, 6, 8, 3, 5, 0} &&
              t.lambda_hat == V{8, 6, 5, 5, 3, 2},
          "tableau data");
  }
  // deformation counterexample and the 321 inequalities
  Report b = appendix_b();
  for (const auto& c : b.cases) check(c.passed(), c.label);
  out.info(std::to_string(checks) + " example checks, including " + std::to_string(b.cases.size()) +
           " counterexample items");
  return out;
}

Outcome criterion7() {
  Outcome out;
  LemmaConfig cfg;
  cfg.trials = kLemmaTrials;
  for (const auto& o : lemma_suite(cfg)) {
    std::string line = o.name + ": " + std::to_string(o.passed) + "/" + std::to_string(o.instances) + " (" + o.mode;
    if (o.points) line += ", " + std::to_string(o.points) + " points";
    line += ")";
    if (!o.ok()) {
      for (const auto& f : o.failures) line += "; " + f;
      out.fail(line);
    } else {
      out.info(line);
    }
    if (o.instances < kLemmaTrials) out.fail(o.name + ": fewer than " + std::to_string(kLemmaTrials) + " instances");
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  for (auto [t, n] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 4}, {LieType::C, 3}, {LieType::B, 3}, {LieType::D, 3}}) {
    RelationContext ctx;
    ctx.flavor = flavor_of(t);
    const Flavor fl = flavor_of(t);
    int eqs = 0;
    for (const auto& w : all_elements(t, n)) {
      const QPoly f = schubert(w);
      const int l = length(w);
      for (int i : simple_reflections(t, n)) {
        SignedWord r = right_mult(w, i), lft = left_mult(i, w);
        // the type C operators act on B through the 2^{-s(w)} scaling
        auto scaled = [&](const SignedWord& v) {
          if (t != LieType::B) return schubert(v);
          const int d = num_negative(v) - num_negative(w);
          return schubert(v) * (d >= 0 ? Rational(1 << d) : Rational(1, 1 << -d));
        };
        const QPoly want_r = length(r) < l ? scaled(r) : QPoly();
        const QPoly want_l = length(lft) < l ? scaled(lft) : QPoly();
        out.expect(eq_mod_relations(ctx, ddiff(fl, i, Side::X, f), want_r), w.pretty() + " x-side " + std::to_string(i));
        out.expect(eq_mod_relations(ctx, ddiff(fl, i, Side::Y, f), want_l), w.pretty() + " y-side " + std::to_string(i));
        eqs += 2;
      }
      out.expect(eq_mod_relations(ctx, exact_oracle().schubert_along(w, PathChoice::Largest), f),
                 w.pretty() + " path dependence");
      ++eqs;
    }
    out.expect(eq_mod_relations(ctx, schubert(identity(t, n)), QPoly::constant(1)), type_n(t, n) + " identity");
    out.info(type_n(t, n) + ": " + std::to_string(eqs) + " equations exact");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"type A flagged formulas equal the oracle exactly", criterion1},
      {"type C formulas equal the oracle modulo relations", criterion2},
      {"type B scaling and formulas equal the oracle", criterion3},
      {"type D star formulas equal the oracle modulo relations", criterion4},
      {"vexillary iff amenable, canonical omega postconditions", criterion5},
      {"worked examples reproduced", criterion6},
      {"operator, relation and alternation identities", criterion7},
      {"oracle defining equations and path independence", criterion8},
  };
  std::cout << "randomized comparisons: prime 2^61-1, error below 2^-" << kErrorBits << " per comparison ("
            << trials_needed(length(longest_element(LieType::C, 5)), kDefaultPrime, kErrorBits)
            << " independent y draws at W_5 degree)\n";
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = criteria[i].second();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << buf << ")\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    failed += !o.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
