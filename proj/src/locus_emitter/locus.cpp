#include "locus_emitter/locus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ring/blocks.hpp"

namespace amen {

namespace {

int bundle_rank(LieType t, int n) {
  switch (t) {
    case LieType::A: return n;
    case LieType::B: return 2 * n + 1;
    case LieType::C:
    case LieType::D: return 2 * n;
  }
  return n;
}

// Row superscripts (r, s) to bundle indices.
int e_index(LieType t, int n, int r) { return t == LieType::A ? r : n - r; }
int f_index(LieType t, int n, int s) {
  switch (t) {
    case LieType::A: return n - s;
    case LieType::B: return n + 1 + s;
    default: return n + s;
  }
}

using Combo = std::vector<std::pair<Rational, std::vector<ChernAtom>>>;

ChernAtom quotient(LieType t, int n, int r, int s, int p) {
  return ChernAtom{BundleKind::Quotient, p, e_index(t, n, r), f_index(t, n, s)};
}

// One row block as a combination of Chern class products.
Combo row_combo(LieType t, int n, const BlockKey& key) {
  const int r = key.r, s = key.s, p = key.p;
  const ChernAtom main = quotient(t, n, r, s, p);
  const Rational half(1, 2);
  switch (key.kind) {
    case BlockKind::H:
    case BlockKind::C: return {{Rational(1), {main}}};
    case BlockKind::CHat: {
      Combo out{{Rational(1), {main}}};
      if (s == r - p && s < 0) {
        ChernAtom ed{BundleKind::EDiff, r, n, n - r};
        ChernAtom fd{BundleKind::FDiff, p - r, n, n + s};
        out.push_back({Rational(key.row & 1 ? -1 : 1), {ed, fd}});
      }
      return out;
    }
    case BlockKind::A: return {{Rational(1), {main}}, {-half, {quotient(t, n, r, 0, p)}}};
    case BlockKind::BUp:
    case BlockKind::BTUp: {
      ChernAtom ed{BundleKind::EDiff, r, n, n - r};
      Rational sign = key.kind == BlockKind::BUp ? half : -half;
      return {{Rational(1), {main}}, {-half, {quotient(t, n, r, 0, r)}}, {sign, {ed}}};
    }
  }
  throw std::logic_error("unknown row block");
}

// c_0 = 1 is dropped; a negative degree kills the product.
bool normalize(std::vector<ChernAtom>& atoms) {
  std::vector<ChernAtom> kept;
  for (const auto& a : atoms) {
    if (a.p < 0) return false;
    if (a.p > 0) kept.push_back(a);
  }
  std::sort(kept.begin(), kept.end());
  atoms = std::move(kept);
  return true;
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string latex_word(const SignedWord& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) os << ',';
    if (w[i] < 0) os << "\\overline{" << -w[i] << '}';
    else os << w[i];
  }
  os << ')';
  return os.str();
}

std::string latex_raising(const PairSet& denom, int ell) {
  std::ostringstream os;
  for (int i = 1; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j) {
      os << "(1-R_{" << i << j << "})";
      if (denom.count({i, j})) os << "(1+R_{" << i << j << "})^{-1}";
    }
  std::string s = os.str();
  return s.empty() ? "" : s + "\\,";
}

std::string plain_raising(const PairSet& denom) {
  std::ostringstream os;
  os << "R^";
  if (denom.empty()) return os.str() + "{}";
  os << '{';
  bool first = true;
  for (auto [i, j] : denom) {
    os << (first ? "" : ",") << '(' << i << ',' << j << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

std::string bundle(char name, int idx, LocusFormat fmt) {
  if (fmt == LocusFormat::Latex) return std::string(1, name) + "_{" + std::to_string(idx) + "}";
  return std::string(1, name) + "_" + std::to_string(idx);
}

std::string coeff_str(const Rational& q, LocusFormat fmt) {
  if (fmt == LocusFormat::Latex && q.get_den() != 1)
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
  return q.get_str();
}

}  // namespace

int generic_bound(LieType t, int n, int r, int s) { return std::max(0, r + s - bundle_rank(t, n)); }

std::vector<RankCondition> rank_conditions(const SignedWord& w0, int n) {
  if (n < w0.n()) throw std::invalid_argument("rank " + std::to_string(n) + " is below the rank of " + w0.pretty());
  const SignedWord w = pad(w0, n);
  std::vector<RankCondition> out;
  if (w.type == LieType::A) {
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s) {
        int cnt = 0;
        for (int i = 1; i <= r; ++i) cnt += w[i] > n - s;
        out.push_back({r, s, cnt, false});
      }
    return out;
  }
  const bool odd = w.type == LieType::B;
  const bool even_orth = w.type == LieType::D;
  const auto z = zeta_embed(w, odd ? ZetaFlavor::B : even_orth ? ZetaFlavor::D : ZetaFlavor::C);
  const int top = odd ? 2 * n + 1 : 2 * n;
  const int rmax = even_orth ? n - 1 : n;
  for (int r = 1; r <= rmax; ++r)
    for (int s = 1; s <= 2 * n; ++s) {
      int cnt = 0;
      for (int i = 1; i <= r; ++i) cnt += z[i - 1] > top - s;
      out.push_back({r, s, cnt, even_orth});
    }
  return out;
}

LocusFormula locus_formula(const SignedWord& w0, int n) {
  if (n < w0.n()) throw std::invalid_argument("rank " + std::to_string(n) + " is below the rank of " + w0.pretty());
  LocusFormula f;
  f.w = pad(w0, n);
  f.n = n;
  f.plan = plan_formula(f.w, FormulaForm::Flagged);
  f.prefactor = f.plan.prefactor;
  const LieType t = f.w.type;
  f.row_degrees = t == LieType::A ? conjugate(f.plan.lambda) : f.plan.lambda;
  for (int j = 0; j < f.plan.ell; ++j)
    f.row_bundles.push_back({e_index(t, n, f.plan.upper[j]), f_index(t, n, f.plan.lower[j])});
  for (const auto& term : f.plan.terms) {
    ChernSum acc{{{}, term.coeff}};
    for (const auto& key : term.rows) {
      ChernSum next;
      Combo combo = row_combo(t, n, key);
      for (const auto& [atoms, c] : acc)
        for (const auto& [q, extra] : combo) {
          std::vector<ChernAtom> prod = atoms;
          prod.insert(prod.end(), extra.begin(), extra.end());
          if (!normalize(prod)) continue;
          next[prod] += c * q;
        }
      acc.clear();
      for (auto& [k, v] : next)
        if (v != 0) acc.emplace(k, v);
    }
    for (const auto& [k, v] : acc) f.terms[k] += v;
  }
  for (auto it = f.terms.begin(); it != f.terms.end();) it = it->second == 0 ? f.terms.erase(it) : std::next(it);
  f.rank_conditions = rank_conditions(f.w, n);
  return f;
}

LocusFormat parse_locus_format(const std::string& s) {
  if (s == "plain") return LocusFormat::Plain;
  if (s == "latex") return LocusFormat::Latex;
  throw std::invalid_argument("unknown format '" + s + "' (plain or latex)");
}

std::string render_atom(const ChernAtom& a, LocusFormat fmt) {
  const bool tex = fmt == LocusFormat::Latex;
  std::ostringstream os;
  os << "c_" << (tex ? "{" : "") << a.p << (tex ? "}" : "") << '(';
  switch (a.kind) {
    case BundleKind::Quotient:
      os << 'E';
      if (a.a != 0) os << " - " << bundle('E', a.a, fmt);
      if (a.b != 0) os << " - " << bundle('F', a.b, fmt);
      break;
    case BundleKind::EDiff:
    case BundleKind::FDiff: {
      const char name = a.kind == BundleKind::EDiff ? 'E' : 'F';
      os << bundle(name, a.a, fmt);
      if (a.b != 0) os << " - " << bundle(name, a.b, fmt);
      break;
    }
  }
  os << ')';
  return os.str();
}

std::string render_sum(const ChernSum& s, LocusFormat fmt) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [atoms, c] : s) {
    Rational mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    if (!unit || atoms.empty()) os << coeff_str(mag, fmt);
    for (size_t i = 0; i < atoms.size(); ++i) os << ((i == 0 && unit) ? "" : " ") << render_atom(atoms[i], fmt);
  }
  return os.str();
}

std::string emit(const SignedWord& w, int n, LocusFormat fmt) {
  const LocusFormula f = locus_formula(w, n);
  const LieType t = f.w.type;
  const bool tex = fmt == LocusFormat::Latex;
  std::ostringstream os;
  std::string ftxt, gtxt;
  switch (t) {
    case LieType::A: ftxt = "f", gtxt = "n-g"; break;
    case LieType::B: ftxt = "n-f", gtxt = "n+1+g"; break;
    default: ftxt = "n-f", gtxt = "n+g"; break;
  }
  std::string body = render_sum(f.terms, fmt);
  std::string pre;
  if (f.prefactor != 1) {
    int e = 0;
    for (mpz_class d = f.prefactor.get_den(); d > 1; d >>= 1) ++e;
    pre = tex ? "2^{-" + std::to_string(e) + "}\\," : "2^-" + std::to_string(e) + " * ";
  }
  if (tex) {
    os << "% type " << type_char(t) << ", w = " << latex_word(f.w) << ", n = " << n << "\n";
    os << "[\\mathfrak{X}_{w}] = " << pre << latex_raising(f.plan.denom, f.plan.ell) << (t == LieType::D ? "\\star\\," : "")
       << (t == LieType::D ? "\\widehat{c}" : "c") << "_{" << vec_str(f.plan.lambda) << "}(E-E_{" << ftxt << "}-F_{"
       << gtxt << "})";
    os << ",\\quad f = " << vec_str(f.plan.upper) << ",\\ g = " << vec_str(f.plan.lower) << "\n";
    os << "= " << pre << (f.prefactor != 1 ? "\\left(" : "") << body << (f.prefactor != 1 ? "\\right)" : "") << "\n";
    return os.str();
  }
  os << "type " << type_char(t) << ", w = " << f.w.pretty() << ", n = " << n << "\n";
  if (t == LieType::A) {
    os << "rank conditions: dim(E_r cap F_s) >= #{i <= r : w_i > n-s}";
  } else {
    auto z = zeta_embed(f.w, t == LieType::B ? ZetaFlavor::B : t == LieType::D ? ZetaFlavor::D : ZetaFlavor::C);
    os << "zeta = " << vec_str(z) << "\n";
    os << "rank conditions: dim(E_r cap F_s) " << (t == LieType::D ? "=" : ">=") << " #{i <= r : zeta_i > "
       << (t == LieType::B ? "2n+1-s" : "2n-s") << "}";
  }
  os << ", beyond the generic bound:\n";
  int shown = 0;
  for (const auto& rc : f.rank_conditions)
    if (rc.bound > generic_bound(t, n, rc.r, rc.s)) {
      os << "  r=" << rc.r << " s=" << rc.s << ": " << rc.bound << "\n";
      ++shown;
    }
  if (shown == 0) os << "  (none)\n";
  os << "[X_w] = " << pre << plain_raising(f.plan.denom) << (t == LieType::D ? " * " : " ") << (t == LieType::D ? "c^_" : "c_")
     << vec_str(f.plan.lambda) << "(E - E_{" << ftxt << "} - F_{" << gtxt << "}), f = " << vec_str(f.plan.upper)
     << ", g = " << vec_str(f.plan.lower);
  if (t == LieType::A) os << ", lambda' = " << vec_str(f.row_degrees);
  os << "\n";
  os << "      = " << pre << (f.prefactor != 1 ? "(" : "") << body << (f.prefactor != 1 ? ")" : "") << "\n";
  return os.str();
}

QPoly pullback(const LocusFormula& f) {
  const LieType t = f.w.type;
  const int n = f.n;
  QPoly total;
  if (t == LieType::A) {
    PolyEnv<Rational> env(CMode::None);
    Blocks<QPoly> blocks(env);
    for (const auto& [atoms, c] : f.terms) {
      QPoly term = QPoly::constant(c);
      for (const auto& a : atoms) {
        if (a.kind != BundleKind::Quotient) throw std::logic_error("type A formulas only use E - E_a - F_b");
        term = term * blocks.eval(BlockKey{BlockKind::H, a.a, n - a.b, a.p, 0});
      }
      total += term;
    }
    return total;
  }
  AbstractBlocks blocks(t == LieType::D ? AbstractFlavor::Eta : AbstractFlavor::Theta, true);
  const int off = t == LieType::B ? 1 : 0;
  for (const auto& [atoms, c] : f.terms) {
    QPoly term = QPoly::constant(c);
    for (const auto& a : atoms) {
      switch (a.kind) {
        case BundleKind::Quotient: term = term * blocks.c(n - a.a, a.b - n - off, a.p); break;
        case BundleKind::EDiff: {
          const int r = n - a.b;
          if (a.a != n || a.p != r) throw std::logic_error("unexpected class " + render_atom(a, LocusFormat::Plain));
          term = term * (QPoly::var(abstract_b(r)) - QPoly::var(abstract_bt(r)));
          break;
        }
        case BundleKind::FDiff:
          if (a.a != n) throw std::logic_error("unexpected class " + render_atom(a, LocusFormat::Plain));
          term = term * blocks.et(n - a.b, a.p);
          break;
      }
    }
    total += term;
  }
  return total * f.prefactor;
}

}  // namespace amen
