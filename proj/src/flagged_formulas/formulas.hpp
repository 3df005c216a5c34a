#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagged_formulas/raising.hpp"
#include "ring/blocks.hpp"
#include "ring/poly.hpp"
#include "weyl_core/weyl.hpp"

namespace amen {

enum class FormulaForm {
  Flagged,      // right and left flags
  Proposition,  // superscripts from the base of the modification
  Factorial,    // leading elements only: superscripts beta(w)
};

std::string form_name(FormulaForm f);
FormulaForm parse_form(const std::string& s);

// One collected summand: coefficient times a product of row blocks.
struct PlannedTerm {
  Rational coeff;
  std::vector<BlockKey> rows;
};

struct FormulaPlan {
  SignedWord w;
  ShapeData shape;
  FormulaForm form = FormulaForm::Flagged;
  int k = 0;
  PairSet denom;
  int ell = 0;
  std::vector<int> lambda;
  std::vector<int> upper;  // left superscripts per row
  std::vector<int> lower;  // right superscripts per row
  Rational prefactor{1};
  std::vector<PlannedTerm> terms;

  // "R^{(1,2)} ^{(5,4,3)}c^{(-2,0,5)}_{(8,5,1)}"
  std::string describe() const;
  int degree() const;
};

// Throws std::invalid_argument when w is not amenable, or (Factorial)
// not leading.
FormulaPlan plan_formula(const SignedWord& w, FormulaForm form = FormulaForm::Flagged);

// Row blocks for one raising term under the orthogonal star action.
// upper/lower are the superscripts of the rows.
std::vector<BlockKey> star_apply(const ShapeData& s, const RaisingTerm& term, const std::vector<int>& upper,
                                 const std::vector<int>& lower);

// Sum over the plan with a trie over row blocks.
template <class B>
auto assemble(const FormulaPlan& plan, B& blocks) -> decltype(blocks.eval(BlockKey{})) {
  using V = decltype(blocks.eval(BlockKey{}));
  std::vector<const PlannedTerm*> order;
  order.reserve(plan.terms.size());
  for (const auto& t : plan.terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const PlannedTerm* a, const PlannedTerm* b) { return a->rows < b->rows; });
  const auto& env = blocks.env();
  const size_t depth = static_cast<size_t>(plan.ell);
  // rec(lo, hi, d): sum over terms in [lo, hi) sharing rows < d
  auto rec = [&](auto&& self, size_t lo, size_t hi, size_t d) -> V {
    if (d == depth) {
      Rational c(0);
      for (size_t t = lo; t < hi; ++t) c += order[t]->coeff;
      return env.scalar(c);
    }
    V acc = env.zero();
    size_t a = lo;
    while (a < hi) {
      size_t b = a + 1;
      while (b < hi && order[b]->rows[d] == order[a]->rows[d]) ++b;
      V inner = self(self, a, b, d + 1);
      acc = acc + blocks.eval(order[a]->rows[d]) * inner;
      a = b;
    }
    return acc;
  };
  V total = order.empty() ? env.zero() : rec(rec, 0, order.size(), 0);
  return total * env.scalar(plan.prefactor);
}

// Default environment per type: A none, C free c, B free c, D free b.
CMode default_cmode(LieType t);
QPoly apply_formula(const SignedWord& w, FormulaForm form = FormulaForm::Flagged);
QPoly evaluate_plan(const FormulaPlan& plan, CMode mode);
template <class K>
Poly<K> evaluate_plan_as(const FormulaPlan& plan, const PolyEnv<K>& env) {
  Blocks<Poly<K>> blocks(env);
  return assemble(plan, blocks);
}
Fp evaluate_plan_numeric(const FormulaPlan& plan, const NumericEnv& env);

// Abstract flagged theta (C, B) and eta (D) polynomials in the symbols
// c[k,p], b[k], bt[k] and t_i.
enum class AbstractFlavor { Theta, Eta };
Var abstract_c(int k, int p);
Var abstract_b(int k);
Var abstract_bt(int k);
QPoly theta_eta_abstract(const SignedWord& w, bool with_t = true, FormulaForm form = FormulaForm::Flagged);

class AbstractBlocks {
 public:
  class AEnv {
   public:
    QPoly scalar(const Rational& q) const { return QPoly::constant(q); }
    QPoly zero() const { return QPoly(); }
  };
  AbstractBlocks(AbstractFlavor flavor, bool with_t) : flavor_(flavor), with_t_(with_t) {}
  const AEnv& env() const { return env_; }

  QPoly base(int k, int q) const;       // k c_q in the symbols
  QPoly ht(int r, int j) const;         // h^r_j(-t)
  QPoly et(int r, int j) const;         // e^r_j(-t)
  QPoly c(int k, int r, int p) const;   // k c^r_p
  QPoly eval(const BlockKey& key) const;

 private:
  AbstractFlavor flavor_;
  bool with_t_;
  AEnv env_;
};

}  // namespace amen
