#pragma once

// Chern class formulas for the degeneracy loci X_w and their rank
// conditions. Output is symbolic; no cohomology ring is modeled.

#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "flagged_formulas/formulas.hpp"
#include "ring/poly.hpp"
#include "weyl_core/weyl.hpp"

namespace amen {

// c_p of a virtual bundle. Index 0 stands for the zero bundle.
enum class BundleKind {
  Quotient,  // E - E_a - F_b
  EDiff,     // E_a - E_b
  FDiff,     // F_a - F_b
};

struct ChernAtom {
  BundleKind kind = BundleKind::Quotient;
  int p = 0, a = 0, b = 0;
  auto key() const { return std::tie(kind, p, a, b); }
  friend bool operator<(const ChernAtom& x, const ChernAtom& y) { return x.key() < y.key(); }
  friend bool operator==(const ChernAtom& x, const ChernAtom& y) { return x.key() == y.key(); }
};

// Collected sum of products of Chern classes; atoms in each key are sorted.
using ChernSum = std::map<std::vector<ChernAtom>, Rational>;

struct RankCondition {
  int r = 0, s = 0, bound = 0;
  bool equality = false;  // type D loci are closures of equality loci
};

struct LocusFormula {
  SignedWord w;  // padded to rank n
  int n = 0;
  FormulaPlan plan;
  std::vector<int> row_degrees;  // lambda, with lambda' in the type A header
  std::vector<std::pair<int, int>> row_bundles;  // (E index, F index) per row
  Rational prefactor{1};
  ChernSum terms;  // without the prefactor
  std::vector<RankCondition> rank_conditions;
};

// dim(E_r cap F_s) lower bounds (equalities in type D) for the displayed
// ranges of r and s. Throws when n is smaller than the rank of w.
std::vector<RankCondition> rank_conditions(const SignedWord& w, int n);
// The bound a generic point satisfies, max(0, r + s - rank E).
int generic_bound(LieType t, int n, int r, int s);

// Throws std::invalid_argument for non-amenable w or n below its rank.
LocusFormula locus_formula(const SignedWord& w, int n);

enum class LocusFormat { Plain, Latex };
LocusFormat parse_locus_format(const std::string& s);
std::string render_atom(const ChernAtom& a, LocusFormat fmt);
std::string render_sum(const ChernSum& s, LocusFormat fmt);
std::string emit(const SignedWord& w, int n, LocusFormat fmt);

// Inverse substitution: Chern classes back to the row blocks. Types B/C/D
// land in the abstract c[k,p], b[k], bt[k], t_i symbols, type A in x, y.
QPoly pullback(const LocusFormula& f);

}  // namespace amen
