#pragma once

// Symmetric functions and the building blocks of the flagged formulas,
// written once over an abstract evaluation environment so the same code
// serves symbolic polynomials and point evaluations.

#include <absl/container/flat_hash_map.h>

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ring/poly.hpp"

namespace amen {

enum class SymKind { E, H };
enum class Alphabet { X, NegY, NegT, Z };

// Elementary or complete symmetric polynomial in the first |band| letters,
// with the swap e^j = h^{-j} for negative bands and the Kronecker delta at 0.
template <class K>
Poly<K> sym_func(SymKind kind, int band, int degree, Alphabet alphabet) {
  if (degree < 0) return Poly<K>();
  if (band < 0) {
    kind = kind == SymKind::E ? SymKind::H : SymKind::E;
    band = -band;
  }
  if (band == 0) return degree == 0 ? Poly<K>::constant(1) : Poly<K>();
  auto letter = [&](int i) {
    switch (alphabet) {
      case Alphabet::X: return Poly<K>::var(xv(i));
      case Alphabet::NegY: return -Poly<K>::var(yv(i));
      case Alphabet::NegT: return -Poly<K>::var(tv(i));
      case Alphabet::Z: return Poly<K>::var(zv(i));
    }
    return Poly<K>();
  };
  // row[d] holds the degree-d function in the letters seen so far
  std::vector<Poly<K>> row(degree + 1);
  row[0] = Poly<K>::constant(1);
  for (int i = 1; i <= band; ++i) {
    Poly<K> z = letter(i);
    if (kind == SymKind::E) {
      for (int d = degree; d >= 1; --d) row[d] += z * row[d - 1];
    } else {
      for (int d = 1; d <= degree; ++d) row[d] += z * row[d - 1];
    }
  }
  return row[degree];
}

// Elementary and complete symmetric functions of a list of scalars.
template <class K>
std::vector<K> sym_values(SymKind kind, const std::vector<K>& letters, int max_degree) {
  std::vector<K> row(max_degree + 1, Field<K>::from_int(0));
  row[0] = Field<K>::from_int(1);
  for (const K& z : letters) {
    if (kind == SymKind::E) {
      for (int d = max_degree; d >= 1; --d) row[d] += z * row[d - 1];
    } else {
      for (int d = 1; d <= max_degree; ++d) row[d] += z * row[d - 1];
    }
  }
  return row;
}

// What the blocks are built from: c_q and the four families of symmetric
// functions in X and -Y. V is a polynomial type or a scalar.
template <class V>
class Env {
 public:
  virtual ~Env() = default;
  virtual V scalar(const Rational& q) const = 0;
  virtual V c(int q) const = 0;
  virtual V sym(SymKind kind, int band, int degree, bool y_side) const = 0;

  V one() const { return scalar(Rational(1)); }
  V zero() const { return scalar(Rational(0)); }
  V ex(int r, int i) const { return sym(SymKind::E, r, i, false); }
  V hx(int r, int i) const { return sym(SymKind::H, r, i, false); }
  V ey(int s, int i) const { return sym(SymKind::E, s, i, true); }
  V hy(int s, int i) const { return sym(SymKind::H, s, i, true); }
};

// How c_q is realized inside a polynomial environment.
enum class CMode {
  None,      // type A: no generators present
  FreeC,     // c_q as a variable
  FreeB,     // c_q = 2 b_q
  PowerSum,  // c_q = Q_q written in odd power sums
};

// Q_q as a polynomial in odd power sums p_1, p_3, ...
template <class K>
const Poly<K>& q_function_ps(int q) {
  static thread_local std::vector<Poly<K>> cache;
  static thread_local uint64_t cache_prime = 0;
  if constexpr (std::is_same_v<K, Fp>) {
    if (cache_prime != Fp::modulus()) cache.clear(), cache_prime = Fp::modulus();
  }
  if (cache.empty()) cache.push_back(Poly<K>::constant(1));
  while (static_cast<int>(cache.size()) <= q) {
    const int d = static_cast<int>(cache.size());
    Poly<K> acc;
    for (int k = 1; k <= d; k += 2) acc += Poly<K>::var(pv(k)) * cache[d - k];
    cache.push_back(acc * Field<K>::from_rational(Rational(2, d)));
  }
  return cache[q];
}

template <class K>
class PolyEnv final : public Env<Poly<K>> {
 public:
  using P = Poly<K>;

  explicit PolyEnv(CMode mode) : mode_(mode) {}

  // Replace y_j by the given scalars (used by the randomized oracle).
  void set_numeric_y(std::vector<K> y) {
    y_values_ = std::move(y);
    cache_.clear();
  }
  CMode mode() const { return mode_; }

  P scalar(const Rational& q) const override { return P::constant(q); }

  P c(int q) const override {
    if (q < 0) return P();
    if (q == 0) return P::constant(1);
    switch (mode_) {
      case CMode::None: throw std::logic_error("c_p requested in a ring without generators");
      case CMode::FreeC: return P::var(cv(q));
      case CMode::FreeB: return P::var(bv(q)) * Field<K>::from_int(2);
      case CMode::PowerSum: return q_function_ps<K>(q);
    }
    return P();
  }

  P sym(SymKind kind, int band, int degree, bool y_side) const override {
    if (degree < 0) return P();
    const std::array<int, 4> key{static_cast<int>(kind), band, degree, y_side ? 1 : 0};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    P v;
    if (y_side && y_values_) {
      SymKind kk = kind;
      int bb = band;
      if (bb < 0) kk = kk == SymKind::E ? SymKind::H : SymKind::E, bb = -bb;
      if (bb == 0) {
        v = degree == 0 ? P::constant(1) : P();
      } else {
        if (bb > static_cast<int>(y_values_->size()))
          throw std::out_of_range("numeric y alphabet too short");
        std::vector<K> letters;
        for (int i = 0; i < bb; ++i) letters.push_back(-(*y_values_)[i]);
        v = P(sym_values<K>(kk, letters, degree)[degree]);
      }
    } else {
      v = sym_func<K>(kind, band, degree, y_side ? Alphabet::NegY : Alphabet::X);
    }
    cache_.emplace(key, v);
    return v;
  }

 private:
  CMode mode_;
  std::optional<std::vector<K>> y_values_;
  mutable absl::flat_hash_map<std::array<int, 4>, P> cache_;
};

// Point evaluation: every variable is a field element.
class NumericEnv final : public Env<Fp> {
 public:
  // c_q are the Q-functions of the z's.
  NumericEnv(std::vector<Fp> x, std::vector<Fp> y, std::vector<Fp> z, int max_degree);

  Fp scalar(const Rational& q) const override { return to_fp(q); }
  Fp c(int q) const override;
  Fp sym(SymKind kind, int band, int degree, bool y_side) const override;

  const std::vector<Fp>& x() const { return x_; }
  const std::vector<Fp>& y() const { return y_; }
  const std::vector<Fp>& c_values() const { return c_; }
  // p_k = sum z_i^k, for evaluating power-sum polynomials.
  Fp power_sum(int k) const;

 private:
  std::vector<Fp> x_, y_, z_, c_;
  int max_degree_;
  mutable absl::flat_hash_map<std::array<int, 4>, Fp> cache_;
};

// f_r: the indeterminate of the hatted blocks.
enum class FFamily { B, BTilde, HalfC };

enum class BlockKind : uint8_t {
  H,       // r h^s_p
  C,       // r c^s_p
  CHat,    // r c^s_p plus the row-parity correction of the eta formulas
  A,       // r a^s_p
  BUp,     // r b^s_r
  BTUp,    // r bt^s_r
};

struct BlockKey {
  BlockKind kind;
  int r, s, p, row;  // row only matters for CHat
  friend bool operator==(const BlockKey& a, const BlockKey& b) {
    return a.kind == b.kind && a.r == b.r && a.s == b.s && a.p == b.p && a.row == b.row;
  }
  friend bool operator<(const BlockKey& a, const BlockKey& b) {
    return std::tie(a.kind, a.r, a.s, a.p, a.row) < std::tie(b.kind, b.r, b.s, b.p, b.row);
  }
  template <class H>
  friend H AbslHashValue(H h, const BlockKey& k) {
    return H::combine(std::move(h), static_cast<int>(k.kind), k.r, k.s, k.p, k.row);
  }
};

// Building blocks over an environment, memoized.
template <class V>
class Blocks {
 public:
  explicit Blocks(const Env<V>& env) : env_(env) {}
  const Env<V>& env() const { return env_; }

  // r h^s_p = sum_i h^r_i(X) e^s_{p-i}(-Y)
  V h(int r, int s, int p) {
    return memo({BlockKind::H, r, s, p, 0}, [&] {
      V acc = env_.zero();
      for (int i = 0; i <= p; ++i) acc = acc + env_.hx(r, i) * env_.ey(s, p - i);
      return acc;
    });
  }

  // r c^s_p = sum_{i,j} c_{p-i-j} e^r_i(X) h^s_j(-Y)
  V c(int r, int s, int p) {
    return memo({BlockKind::C, r, s, p, 0}, [&] {
      V acc = env_.zero();
      for (int j = 0; j <= p; ++j) {
        V inner = env_.zero();
        for (int i = 0; i + j <= p; ++i) inner = inner + env_.c(p - i - j) * env_.ex(r, i);
        acc = acc + inner * env_.hy(s, j);
      }
      return acc;
    });
  }

  // single-alphabet block r c_p of the orthogonal case
  V c(int r, int p) { return c(r, 0, p); }

  // r b_p: c for p<r, half c for p>r, and the two half-sums at p=r
  V b(int r, int p, bool tilde = false) {
    if (p == r) {
      V e = env_.ex(r, r) * env_.scalar(Rational(tilde ? -1 : 1, 2));
      return c(r, p) * env_.scalar(Rational(1, 2)) + e;
    }
    if (tilde) throw std::invalid_argument("bt_p is only defined at p = r");
    return p < r ? c(r, p) : c(r, p) * env_.scalar(Rational(1, 2));
  }

  V f(FFamily fam, int r) {
    switch (fam) {
      case FFamily::B: return b(r, r, false);
      case FFamily::BTilde: return b(r, r, true);
      case FFamily::HalfC: return c(r, r) * env_.scalar(Rational(1, 2));
    }
    return env_.zero();
  }

  // sum_{i>=1} r c_{p-i} h^s_i(-Y)
  V tail(int r, int s, int p) {
    V acc = env_.zero();
    for (int i = 1; i <= p; ++i) acc = acc + c(r, p - i) * env_.hy(s, i);
    return acc;
  }

  // r a^s_p = half r c_p + tail
  V a(int r, int s, int p) {
    return memo({BlockKind::A, r, s, p, 0},
                [&] { return c(r, p) * env_.scalar(Rational(1, 2)) + tail(r, s, p); });
  }

  // r b^s_r and r bt^s_r
  V b_up(int r, int s, bool tilde) {
    return memo({tilde ? BlockKind::BTUp : BlockKind::BUp, r, s, r, 0},
                [&] { return b(r, r, tilde) + tail(r, s, r); });
  }
  V f_up(FFamily fam, int r, int s) { return f(fam, r) + tail(r, s, r); }

  // r chat^s_p for an indeterminate family: adds (2 f_r - r c_r) e^{p-r}_{p-r}(-Y)
  // when s = r - p < 0.
  V c_hat_family(FFamily fam, int r, int s, int p) {
    V base = c(r, s, p);
    if (s == r - p && s < 0) {
      V corr = f(fam, r) * env_.scalar(Rational(2)) - c(r, r);
      base = base + corr * env_.ey(p - r, p - r);
    }
    return base;
  }

  // The row-i hatted block of the eta formulas: adds
  // (-1)^i e^r_r(X) e^{p-r}_{p-r}(-Y) when s = r - p < 0.
  V c_hat_row(int row, int r, int s, int p) {
    return memo({BlockKind::CHat, r, s, p, row & 1}, [&] {
      V base = c(r, s, p);
      if (s == r - p && s < 0) {
        V corr = env_.ex(r, r) * env_.ey(p - r, p - r);
        base = (row & 1) ? base - corr : base + corr;
      }
      return base;
    });
  }

  V eval(const BlockKey& k) {
    switch (k.kind) {
      case BlockKind::H: return h(k.r, k.s, k.p);
      case BlockKind::C: return c(k.r, k.s, k.p);
      case BlockKind::CHat: return c_hat_row(k.row, k.r, k.s, k.p);
      case BlockKind::A: return a(k.r, k.s, k.p);
      case BlockKind::BUp: return b_up(k.r, k.s, false);
      case BlockKind::BTUp: return b_up(k.r, k.s, true);
    }
    return env_.zero();
  }

 private:
  template <class F>
  V memo(const BlockKey& key, F&& make) {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    V v = make();
    cache_.emplace(key, v);
    return v;
  }

  const Env<V>& env_;
  absl::flat_hash_map<BlockKey, V> cache_;
};

}  // namespace amen
