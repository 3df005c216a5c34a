#pragma once

#include <optional>
#include <stdexcept>

#include "ring/poly.hpp"

namespace amen {

enum class Flavor { A, BC, D };
enum class Side { X, Y };

// Index of the reflection s_box of the even orthogonal group.
constexpr int kBox = -1;

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::A: return "A";
    case Flavor::BC: return "BC";
    case Flavor::D: return "D";
  }
  return "?";
}

// The involution x_j -> -y_j, y_j -> -x_j fixing the generators.
template <class K>
Poly<K> phi(const Poly<K>& f) {
  std::vector<std::pair<Var, std::pair<Var, int>>> table;
  const int n = std::max(f.max_index(VarKind::X), f.max_index(VarKind::Y));
  for (int j = 1; j <= n; ++j) {
    table.push_back({xv(j), {yv(j), -1}});
    table.push_back({yv(j), {xv(j), -1}});
  }
  return f.rename(table);
}

namespace detail {

template <class K>
Poly<K> gen_c(int q) {
  if (q < 0) return Poly<K>();
  if (q == 0) return Poly<K>::constant(1);
  return Poly<K>::var(cv(q));
}

template <class K>
Poly<K> act_x(Flavor flavor, int i, const Poly<K>& f) {
  using P = Poly<K>;
  if (i >= 1) return f.rename({{xv(i), {xv(i + 1), 1}}, {xv(i + 1), {xv(i), 1}}});
  if (i == 0) {
    if (flavor != Flavor::BC) throw std::invalid_argument("s_0 acts only in the symplectic/odd orthogonal ring");
    const P x1 = P::var(xv(1));
    return f.substitute([&](Var v) -> std::optional<P> {
      switch (var_kind(v)) {
        case VarKind::X:
          if (var_index(v) == 1) return -x1;
          return std::nullopt;
        case VarKind::C: {
          const int p = var_index(v);
          P img = P::var(v);
          P power = P::constant(1);
          for (int j = 1; j <= p; ++j) {
            power *= x1;
            img += power * gen_c<K>(p - j) * Field<K>::from_int(2);
          }
          return img;
        }
        case VarKind::P: return P::var(v) + x1.pow(var_index(v));
        case VarKind::B: throw std::invalid_argument("s_0 does not act on b_p");
        default: return std::nullopt;
      }
    });
  }
  if (i == kBox) {
    if (flavor != Flavor::D) throw std::invalid_argument("s_box applied outside the type D context");
    const P x1 = P::var(xv(1)), x2 = P::var(xv(2));
    // sum_{j<p} h_j(x1,x2) c_{p-1-j}, with c_q = 2 b_q
    auto series = [&](int p, bool in_b) {
      P acc;
      for (int j = 0; j <= p - 1; ++j) {
        P hj;
        for (int a = 0; a <= j; ++a) hj += x1.pow(a) * x2.pow(j - a);
        const int q = p - 1 - j;
        P cq = q == 0 ? P::constant(1)
                      : (in_b ? P::var(bv(q)) * Field<K>::from_int(2) : P::var(cv(q)));
        acc += hj * cq;
      }
      return (x1 + x2) * acc;
    };
    return f.substitute([&](Var v) -> std::optional<P> {
      switch (var_kind(v)) {
        case VarKind::X:
          if (var_index(v) == 1) return -x2;
          if (var_index(v) == 2) return -x1;
          return std::nullopt;
        case VarKind::B: return P::var(v) + series(var_index(v), true);
        case VarKind::C: return P::var(v) + series(var_index(v), false) * Field<K>::from_int(2);
        case VarKind::P: return P::var(v) + x1.pow(var_index(v)) + x2.pow(var_index(v));
        default: return std::nullopt;
      }
    });
  }
  throw std::invalid_argument("invalid reflection index");
}

template <class K>
Poly<K> ddiff_x(Flavor flavor, int i, const Poly<K>& f) {
  const Poly<K> diff = f - act_x(flavor, i, f);
  if (diff.is_zero()) return diff;
  if (i >= 1)
    return divide_linear(diff, xv(i), Field<K>::from_int(1), std::optional<Var>(xv(i + 1)), Field<K>::from_int(-1));
  if (i == 0) return divide_linear(diff, xv(1), Field<K>::from_int(-2), std::nullopt, Field<K>::from_int(0));
  return divide_linear(diff, xv(1), Field<K>::from_int(-1), std::optional<Var>(xv(2)), Field<K>::from_int(-1));
}

inline void check_index(Flavor flavor, int i) {
  if (flavor == Flavor::A && i < 1) throw std::invalid_argument("type A has reflections s_i with i >= 1 only");
  if (i < kBox) throw std::invalid_argument("invalid reflection index");
}

}  // namespace detail

// Image of f under s_i acting on the x side, or s_i^y = phi s_i phi.
template <class K>
Poly<K> weyl_act(Flavor flavor, int i, Side side, const Poly<K>& f) {
  detail::check_index(flavor, i);
  if (side == Side::X) return detail::act_x(flavor, i, f);
  return phi(detail::act_x(flavor, i, phi(f)));
}

// Divided difference; throws std::domain_error on a nonzero remainder.
template <class K>
Poly<K> ddiff(Flavor flavor, int i, Side side, const Poly<K>& f) {
  detail::check_index(flavor, i);
  if (side == Side::X) return detail::ddiff_x(flavor, i, f);
  return phi(detail::ddiff_x(flavor, i, phi(f)));
}

}  // namespace amen
