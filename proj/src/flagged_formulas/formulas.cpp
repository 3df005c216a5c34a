#include "flagged_formulas/formulas.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace amen {

std::string form_name(FormulaForm f) {
  switch (f) {
    case FormulaForm::Flagged: return "flagged";
    case FormulaForm::Proposition: return "proposition";
    case FormulaForm::Factorial: return "factorial";
  }
  return "?";
}

FormulaForm parse_form(const std::string& s) {
  if (s == "flagged") return FormulaForm::Flagged;
  if (s == "proposition" || s == "prop") return FormulaForm::Proposition;
  if (s == "factorial") return FormulaForm::Factorial;
  throw std::invalid_argument("unknown formula form '" + s + "'");
}

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

int at(const std::vector<int>& v, int i) { return i >= 1 && i <= static_cast<int>(v.size()) ? v[i - 1] : 0; }

Rational pow2_neg(int e) {
  mpz_class d = 1;
  d <<= e;
  return Rational(mpz_class(1), d);
}

}  // namespace

std::string FormulaPlan::describe() const {
  std::ostringstream os;
  if (prefactor != 1) os << prefactor.get_str() << " ";
  os << "R^";
  if (denom.empty()) {
    os << "∅";
  } else {
    os << '{';
    bool first = true;
    for (auto [i, j] : denom) {
      os << (first ? "" : ",") << '(' << i << ',' << j << ')';
      first = false;
    }
    os << '}';
  }
  const char* block = "c";
  if (w.type == LieType::A) block = "h";
  if (w.type == LieType::D) {
    os << " ⋆";
    block = "ĉ";
  }
  os << " ^{" << vec_str(upper) << "}" << block << "^{" << vec_str(lower) << "}_{" << vec_str(lambda) << "}";
  return os.str();
}

int FormulaPlan::degree() const {
  int d = 0;
  for (int x : lambda) d += x;
  return d;
}

std::vector<BlockKey> star_apply(const ShapeData& s, const RaisingTerm& term, const std::vector<int>& upper,
                                 const std::vector<int>& lower) {
  const int ell = static_cast<int>(term.index.size());
  if (static_cast<int>(upper.size()) < ell || static_cast<int>(lower.size()) < ell)
    throw std::invalid_argument("star_apply: superscripts shorter than the raising term");
  const int m = s.m;
  const std::set<int> supp = term.support(m);
  std::vector<BlockKey> rows(ell);
  auto bar = [&](int i) {
    int r = upper[i - 1], sup = lower[i - 1], p = term.index[i - 1];
    if (supp.count(i)) return BlockKey{BlockKind::C, r, sup, p, 0};
    return BlockKey{BlockKind::CHat, r, sup, p, i & 1};
  };
  if (s.d_type == 0) {
    for (int i = 1; i <= ell; ++i) rows[i - 1] = bar(i);
    return rows;
  }
  for (int i = 1; i <= std::min(m, ell); ++i) rows[i - 1] = bar(i);
  if (m + 1 <= ell) {
    const int i = m + 1;
    const int r = upper[i - 1], sup = lower[i - 1];
    if (term.touches(i)) {
      rows[i - 1] = BlockKey{BlockKind::A, r, sup, term.index[i - 1], 0};
    } else {
      if (r != s.lambda_at(i))
        throw std::logic_error("star_apply: row " + std::to_string(i) + " superscript " + std::to_string(r) +
                               " differs from the part " + std::to_string(s.lambda_at(i)));
      rows[i - 1] = BlockKey{s.d_type == 1 ? BlockKind::BUp : BlockKind::BTUp, r, sup, r, 0};
    }
  }
  for (int i = m + 2; i <= ell; ++i)
    rows[i - 1] = BlockKey{BlockKind::C, upper[i - 1], lower[i - 1], term.index[i - 1], 0};
  return rows;
}

FormulaPlan plan_formula(const SignedWord& w, FormulaForm form) {
  validate(w);
  FormulaPlan plan;
  plan.w = w;
  plan.form = form;
  std::optional<Modification> mod;
  if (form == FormulaForm::Factorial) {
    if (!is_leading(w)) throw std::invalid_argument("factorial form needs a leading element, got " + w.pretty());
  } else if (form == FormulaForm::Proposition) {
    mod = amenable_decompose(w);
    if (!mod) throw std::invalid_argument("element " + w.pretty() + " is not amenable");
  } else if (!is_amenable(w)) {
    throw std::invalid_argument("element " + w.pretty() + " is not amenable");
  }

  if (w.type == LieType::A) {
    plan.shape = shape(w);
    const auto& s = plan.shape;
    plan.ell = s.ell;
    plan.lambda = s.lambda;
    if (form == FormulaForm::Flagged) {
      plan.upper = s.f_flag;
      plan.lower = s.g_flag;
    } else {
      std::vector<int> lh = form == FormulaForm::Proposition ? shape(mod->base).lambda : s.lambda;
      for (int j = 1; j <= s.ell; ++j) {
        plan.upper.push_back(j + at(lh, j) - s.lambda_at(j));
        plan.lower.push_back(at(lh, j));
      }
    }
    for (const auto& [idx, c] : collect_by_index(expand_RD({}, plan.ell, plan.lambda))) {
      PlannedTerm t{Rational(static_cast<long>(c)), {}};
      for (int j = 1; j <= plan.ell; ++j)
        t.rows.push_back(BlockKey{BlockKind::H, plan.upper[j - 1], plan.lower[j - 1], idx[j - 1], 0});
      plan.terms.push_back(std::move(t));
    }
    return plan;
  }

  int k = 0;
  if (form == FormulaForm::Proposition) k = mod->k;
  else k = shape(w).k;
  plan.k = k;
  plan.shape = shape_at(w, k);
  const auto& s = plan.shape;
  plan.ell = s.ell;
  plan.lambda = s.lambda;
  for (auto pr : s.denom_set)
    if (pr.second <= s.ell) plan.denom.insert(pr);
  if (form == FormulaForm::Flagged) {
    plan.upper = s.f_flag;
    plan.lower = s.g_flag;
  } else if (form == FormulaForm::Proposition) {
    ShapeData bs = shape(mod->base);
    for (int j = 1; j <= s.ell; ++j) {
      plan.upper.push_back(k + bs.xi_at(j));
      plan.lower.push_back(s.beta_at(j) + bs.xi_at(j) - s.xi_at(j));
    }
  } else {
    for (int j = 1; j <= s.ell; ++j) {
      plan.upper.push_back(k + s.xi_at(j));
      plan.lower.push_back(s.beta_at(j));
    }
  }

  if (w.type == LieType::B) plan.prefactor = pow2_neg(num_negative(w));
  if (w.type == LieType::D) plan.prefactor = pow2_neg(s.m);

  auto terms = expand_RD(plan.denom, plan.ell, plan.lambda);
  if (w.type == LieType::D) {
    std::map<std::vector<BlockKey>, int64_t> acc;
    for (const auto& t : terms) acc[star_apply(s, t, plan.upper, plan.lower)] += t.coeff;
    for (auto& [rows, c] : acc)
      if (c != 0) plan.terms.push_back(PlannedTerm{Rational(static_cast<long>(c)), rows});
  } else {
    for (const auto& [idx, c] : collect_by_index(terms)) {
      PlannedTerm t{Rational(static_cast<long>(c)), {}};
      for (int j = 1; j <= plan.ell; ++j)
        t.rows.push_back(BlockKey{BlockKind::C, plan.upper[j - 1], plan.lower[j - 1], idx[j - 1], 0});
      plan.terms.push_back(std::move(t));
    }
  }
  return plan;
}

CMode default_cmode(LieType t) {
  switch (t) {
    case LieType::A: return CMode::None;
    case LieType::B:
    case LieType::C: return CMode::FreeC;
    case LieType::D: return CMode::FreeB;
  }
  return CMode::None;
}

QPoly evaluate_plan(const FormulaPlan& plan, CMode mode) {
  PolyEnv<Rational> env(mode);
  return evaluate_plan_as(plan, env);
}

QPoly apply_formula(const SignedWord& w, FormulaForm form) {
  return evaluate_plan(plan_formula(w, form), default_cmode(w.type));
}

Fp evaluate_plan_numeric(const FormulaPlan& plan, const NumericEnv& env) {
  Blocks<Fp> blocks(env);
  return assemble(plan, blocks);
}

Var abstract_c(int k, int p) { return symbol("c[" + std::to_string(k) + "," + std::to_string(p) + "]", p); }
Var abstract_b(int k) { return symbol("b[" + std::to_string(k) + "]", k); }
Var abstract_bt(int k) { return symbol("bt[" + std::to_string(k) + "]", k); }

QPoly AbstractBlocks::base(int k, int q) const {
  if (q < 0) return QPoly();
  if (q == 0) return QPoly::constant(1);
  if (flavor_ == AbstractFlavor::Eta && q == k)
    return QPoly::var(abstract_b(k)) + QPoly::var(abstract_bt(k));
  return QPoly::var(abstract_c(k, q));
}

QPoly AbstractBlocks::ht(int r, int j) const {
  if (!with_t_) return j == 0 ? QPoly::constant(1) : QPoly();
  return sym_func<Rational>(SymKind::H, r, j, Alphabet::NegT);
}

QPoly AbstractBlocks::et(int r, int j) const {
  if (!with_t_) return j == 0 ? QPoly::constant(1) : QPoly();
  return sym_func<Rational>(SymKind::E, r, j, Alphabet::NegT);
}

QPoly AbstractBlocks::c(int k, int r, int p) const {
  QPoly acc;
  for (int j = 0; j <= p; ++j) acc += base(k, p - j) * ht(r, j);
  return acc;
}

QPoly AbstractBlocks::eval(const BlockKey& key) const {
  const int k = key.r, s = key.s, p = key.p;
  auto tail = [&](int upto) {
    QPoly acc;
    for (int j = 1; j <= upto; ++j) acc += base(k, upto - j) * ht(s, j);
    return acc;
  };
  switch (key.kind) {
    case BlockKind::C: return c(k, s, p);
    case BlockKind::CHat: {
      QPoly v = c(k, s, p);
      if (s == k - p && s < 0) {
        QPoly f = QPoly::var(key.row & 1 ? abstract_bt(k) : abstract_b(k));
        v += (f * Rational(2) - base(k, k)) * et(p - k, p - k);
      }
      return v;
    }
    case BlockKind::A: return base(k, p) * Rational(1, 2) + tail(p);
    case BlockKind::BUp: return QPoly::var(abstract_b(k)) + tail(k);
    case BlockKind::BTUp: return QPoly::var(abstract_bt(k)) + tail(k);
    case BlockKind::H: break;
  }
  throw std::invalid_argument("abstract blocks have no type A rows");
}

QPoly theta_eta_abstract(const SignedWord& w, bool with_t, FormulaForm form) {
  if (w.type == LieType::A) throw std::invalid_argument("theta and eta polynomials are defined in types B, C and D");
  FormulaPlan plan = plan_formula(w, form);
  AbstractBlocks blocks(w.type == LieType::D ? AbstractFlavor::Eta : AbstractFlavor::Theta, with_t);
  return assemble(plan, blocks);
}

}  // namespace amen
