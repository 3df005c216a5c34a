#include "ring/latex.hpp"

#include <algorithm>
#include <regex>

namespace amen {

std::string var_latex(Var v) {
  const std::string i = std::to_string(var_index(v));
  switch (var_kind(v)) {
    case VarKind::X: return "x_{" + i + "}";
    case VarKind::Y: return "y_{" + i + "}";
    case VarKind::T: return "t_{" + i + "}";
    case VarKind::Z: return "z_{" + i + "}";
    case VarKind::C: return "c_{" + i + "}";
    case VarKind::B: return "b_{" + i + "}";
    case VarKind::P: return "p_{" + i + "}";
    case VarKind::S: break;
  }
  // abstract generators c[k,p], b[k], bt[k]; other symbols verbatim
  static const std::regex ckp(R"(c\[(-?\d+),(-?\d+)\])"), bk(R"((bt?)\[(-?\d+)\])");
  const std::string& name = symbol_name(v);
  std::smatch m;
  if (std::regex_match(name, m, ckp)) return "{}^{" + m[1].str() + "}c_{" + m[2].str() + "}";
  if (std::regex_match(name, m, bk)) return (m[1] == "bt" ? "\\tilde{b}_{" : "b_{") + m[2].str() + "}";
  return name;
}

std::string mono_latex(const Mono& m) {
  std::string s;
  for (const auto& [v, e] : mono_factors(m)) {
    if (!s.empty()) s += " ";
    s += var_latex(v);
    if (e > 1) s += "^{" + std::to_string(e) + "}";
  }
  return s;
}

std::string rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  const bool neg = sgn(q) < 0;
  mpz_class num = abs(q.get_num());
  return std::string(neg ? "-" : "") + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_str(const QPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<const QPoly::Term*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const QPoly::Term* a, const QPoly::Term* b) { return graded_lex_before(a->first, b->first); });
  std::string s;
  for (const auto* t : order) {
    const bool neg = sgn(t->second) < 0;
    const Rational mag = neg ? Rational(-t->second) : t->second;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (t->first.f.empty()) {
      s += rational_latex(mag);
    } else {
      if (mag != 1) s += rational_latex(mag) + " ";
      s += mono_latex(t->first);
    }
  }
  return s;
}

}  // namespace amen
