#pragma once

#include <absl/container/flat_hash_map.h>
#include <absl/container/inlined_vector.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ring/coeff.hpp"

namespace amen {

// Variables are 16-bit ids: 4 bits of kind, 12 bits of index.
enum class VarKind : uint16_t { X = 1, Y = 2, T = 3, Z = 4, C = 5, B = 6, P = 7, S = 8 };
using Var = uint16_t;

constexpr Var make_var(VarKind k, int index) {
  return static_cast<Var>((static_cast<uint16_t>(k) << 12) | static_cast<uint16_t>(index));
}
constexpr VarKind var_kind(Var v) { return static_cast<VarKind>(v >> 12); }
constexpr int var_index(Var v) { return v & 0xfff; }

inline Var xv(int i) { return make_var(VarKind::X, i); }
inline Var yv(int i) { return make_var(VarKind::Y, i); }
inline Var tv(int i) { return make_var(VarKind::T, i); }
inline Var zv(int i) { return make_var(VarKind::Z, i); }
inline Var cv(int p) { return make_var(VarKind::C, p); }
inline Var bv(int p) { return make_var(VarKind::B, p); }
inline Var pv(int k) { return make_var(VarKind::P, k); }

// Formal symbols carry a display name and a degree.
Var symbol(const std::string& name, int degree);
const std::string& symbol_name(Var v);
std::optional<Var> find_symbol(const std::string& name);

int var_degree(Var v);
std::string var_name(Var v);

// A monomial: factors (var << 16 | exp) sorted by var, exponents positive.
struct Mono {
  absl::InlinedVector<uint32_t, 6> f;

  static uint32_t pack(Var v, int e) { return (static_cast<uint32_t>(v) << 16) | static_cast<uint32_t>(e); }
  static Var var_of(uint32_t x) { return static_cast<Var>(x >> 16); }
  static int exp_of(uint32_t x) { return static_cast<int>(x & 0xffff); }

  int exp(Var v) const {
    for (uint32_t x : f)
      if (var_of(x) == v) return exp_of(x);
    return 0;
  }
  int degree() const {
    int d = 0;
    for (uint32_t x : f) d += var_degree(var_of(x)) * exp_of(x);
    return d;
  }
  int total_exponent() const {
    int d = 0;
    for (uint32_t x : f) d += exp_of(x);
    return d;
  }
  Mono without(Var v) const {
    Mono m;
    for (uint32_t x : f)
      if (var_of(x) != v) m.f.push_back(x);
    return m;
  }
  Mono times(Var v, int e) const {
    if (e == 0) return *this;
    Mono m;
    bool done = false;
    for (uint32_t x : f) {
      Var w = var_of(x);
      if (!done && w == v) {
        m.f.push_back(pack(v, exp_of(x) + e));
        done = true;
        continue;
      }
      if (!done && w > v) {
        m.f.push_back(pack(v, e));
        done = true;
      }
      m.f.push_back(x);
    }
    if (!done) m.f.push_back(pack(v, e));
    return m;
  }

  friend bool operator==(const Mono& a, const Mono& b) { return a.f == b.f; }
  friend bool operator<(const Mono& a, const Mono& b) {
    return std::lexicographical_compare(a.f.begin(), a.f.end(), b.f.begin(), b.f.end());
  }
  template <class H>
  friend H AbslHashValue(H h, const Mono& m) {
    return H::combine_contiguous(std::move(h), m.f.data(), m.f.size());
  }
};

inline Mono operator*(const Mono& a, const Mono& b) {
  Mono m;
  size_t i = 0, j = 0;
  while (i < a.f.size() && j < b.f.size()) {
    Var va = Mono::var_of(a.f[i]), vb = Mono::var_of(b.f[j]);
    if (va == vb) {
      int e = Mono::exp_of(a.f[i]) + Mono::exp_of(b.f[j]);
      if (e > 0xffff) throw std::overflow_error("monomial exponent overflow");
      m.f.push_back(Mono::pack(va, e));
      ++i, ++j;
    } else if (va < vb) {
      m.f.push_back(a.f[i++]);
    } else {
      m.f.push_back(b.f[j++]);
    }
  }
  for (; i < a.f.size(); ++i) m.f.push_back(a.f[i]);
  for (; j < b.f.size(); ++j) m.f.push_back(b.f[j]);
  return m;
}

// Graded lex: higher degree first, then larger exponent on the earliest variable.
bool graded_lex_before(const Mono& a, const Mono& b);
std::string mono_str(const Mono& m);
// Factors in display order.
std::vector<std::pair<Var, int>> mono_factors(const Mono& m);

template <class K>
class Poly {
 public:
  using Term = std::pair<Mono, K>;
  using Map = absl::flat_hash_map<Mono, K>;

  Poly() = default;
  explicit Poly(const K& c) {
    if (!Field<K>::is_zero(c)) terms_.push_back({Mono{}, c});
  }
  static Poly constant(int64_t c) { return Poly(Field<K>::from_int(c)); }
  static Poly constant(const Rational& q) { return Poly(Field<K>::from_rational(q)); }
  static Poly var(Var v, int e = 1) {
    Poly p;
    if (e == 0) return constant(1);
    p.terms_.push_back({Mono{}.times(v, e), Field<K>::from_int(1)});
    return p;
  }
  static Poly from_map(Map&& m) {
    Poly p;
    p.terms_.reserve(m.size());
    for (auto& [mono, c] : m)
      if (!Field<K>::is_zero(c)) p.terms_.push_back({mono, c});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    return p;
  }
  static Poly from_terms(std::vector<Term> t) {
    Map m;
    for (auto& [mono, c] : t) {
      auto [it, fresh] = m.try_emplace(mono, c);
      if (!fresh) it->second += c;
    }
    return from_map(std::move(m));
  }

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  K coefficient(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& x) { return t.first < x; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Field<K>::from_int(0);
  }
  K constant_term() const { return coefficient(Mono{}); }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    for (const auto& t : terms_)
      if (t.first.degree() != d) return false;
    return true;
  }
  bool contains_kind(VarKind k) const {
    for (const auto& t : terms_)
      for (uint32_t x : t.first.f)
        if (var_kind(Mono::var_of(x)) == k) return true;
    return false;
  }
  int max_index(VarKind k) const {
    int r = 0;
    for (const auto& t : terms_)
      for (uint32_t x : t.first.f)
        if (var_kind(Mono::var_of(x)) == k) r = std::max(r, var_index(Mono::var_of(x)));
    return r;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& b) { return *this = merge(*this, b, false); }
  Poly& operator-=(const Poly& b) { return *this = merge(*this, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.size() == 1 && a.terms_[0].first.f.empty()) return b * a.terms_[0].second;
    if (b.size() == 1 && b.terms_[0].first.f.empty()) return a * b.terms_[0].second;
    Map m;
    m.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        K prod = ca * cb;
        auto [it, fresh] = m.try_emplace(ma * mb, prod);
        if (!fresh) it->second += prod;
      }
    return from_map(std::move(m));
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend Poly operator*(const Poly& a, const K& c) {
    if (Field<K>::is_zero(c)) return Poly();
    Poly p = a;
    for (auto& t : p.terms_) t.second *= c;
    return p;
  }
  friend Poly operator*(const K& c, const Poly& a) { return a * c; }

  Poly pow(int e) const {
    Poly r = constant(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Substitute variables; `image` returns the replacement or nullopt to keep.
  Poly substitute(const std::function<std::optional<Poly>(Var)>& image) const {
    absl::flat_hash_map<Var, std::optional<Poly>> img;
    // node-based so the pointers collected below stay valid across inserts
    std::unordered_map<uint32_t, Poly> powers;
    auto power_of = [&](Var v, int e) -> const Poly* {
      auto it = img.find(v);
      if (it == img.end()) it = img.emplace(v, image(v)).first;
      if (!it->second) return nullptr;
      uint32_t key = Mono::pack(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, it->second->pow(e)).first;
      return &pit->second;
    };
    Map acc;
    for (const auto& [mono, c] : terms_) {
      Mono kept;
      std::vector<const Poly*> factors;
      for (uint32_t x : mono.f) {
        const Poly* p = power_of(Mono::var_of(x), Mono::exp_of(x));
        if (p)
          factors.push_back(p);
        else
          kept.f.push_back(x);
      }
      Poly prod;
      prod.terms_.push_back({kept, c});
      for (const Poly* p : factors) prod = prod * *p;
      for (auto& [m2, c2] : prod.terms_) {
        auto [it, fresh] = acc.try_emplace(m2, c2);
        if (!fresh) it->second += c2;
      }
    }
    return from_map(std::move(acc));
  }

  // Signed renaming v -> sign * w for the listed variables.
  Poly rename(const std::vector<std::pair<Var, std::pair<Var, int>>>& table) const {
    Map acc;
    for (const auto& [mono, c] : terms_) {
      Mono m;
      K coeff = c;
      for (uint32_t x : mono.f) {
        Var v = Mono::var_of(x);
        int e = Mono::exp_of(x);
        for (const auto& [from, to] : table)
          if (from == v) {
            v = to.first;
            if (to.second < 0 && (e & 1)) coeff = -coeff;
            break;
          }
        m = m.times(v, e);
      }
      auto [it, fresh] = acc.try_emplace(m, coeff);
      if (!fresh) it->second += coeff;
    }
    return from_map(std::move(acc));
  }

  template <class F>
  K eval(F&& value_of) const {
    absl::flat_hash_map<uint32_t, K> cache;
    K total = Field<K>::from_int(0);
    for (const auto& [mono, c] : terms_) {
      K t = c;
      for (uint32_t x : mono.f) {
        auto it = cache.find(x);
        if (it == cache.end()) {
          K base = value_of(Mono::var_of(x));
          K p = Field<K>::from_int(1);
          for (int e = Mono::exp_of(x); e > 0; --e) p = p * base;
          it = cache.emplace(x, p).first;
        }
        t = t * it->second;
      }
      total = total + t;
    }
    return total;
  }

  // Rewrites the polynomial as sum_e v^e * F_e.
  std::vector<Poly> coefficients_in(Var v) const {
    std::vector<Map> parts;
    for (const auto& [mono, c] : terms_) {
      int e = mono.exp(v);
      if (static_cast<int>(parts.size()) <= e) parts.resize(e + 1);
      parts[e].emplace(mono.without(v), c);
    }
    std::vector<Poly> out;
    out.reserve(parts.size());
    for (auto& m : parts) out.push_back(from_map(std::move(m)));
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const Term* a, const Term* b) { return graded_lex_before(a->first, b->first); });
    std::string s;
    bool first = true;
    for (const Term* t : order) {
      std::string c = Field<K>::str(t->second);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      if (t->first.f.empty()) {
        s += c;
      } else {
        if (c != "1") s += c + "*";
        s += mono_str(t->first);
      }
    }
    return s;
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.push_back({b.terms_[j].first, subtract ? K(-b.terms_[j].second) : b.terms_[j].second});
        ++j;
      } else {
        K c = subtract ? K(a.terms_[i].second - b.terms_[j].second) : K(a.terms_[i].second + b.terms_[j].second);
        if (!Field<K>::is_zero(c)) r.terms_.push_back({a.terms_[i].first, c});
        ++i, ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using QPoly = Poly<Rational>;
using FPoly = Poly<Fp>;

// Exact quotient f / (ca*a + cb*b); throws if the division leaves a remainder.
template <class K>
Poly<K> divide_linear(const Poly<K>& f, Var a, const K& ca, std::optional<Var> b, const K& cb) {
  if (f.is_zero()) return f;
  std::vector<Poly<K>> F = f.coefficients_in(a);
  const int d = static_cast<int>(F.size()) - 1;
  const K inv = Field<K>::inv(ca);
  Poly<K> bterm = b ? Poly<K>::var(*b) * cb : Poly<K>();
  std::vector<Poly<K>> Q(std::max(d, 0) + 1);
  Poly<K> carry;  // cb * b * Q_e
  for (int e = d; e >= 1; --e) {
    Q[e - 1] = (F[e] - carry) * inv;
    carry = b ? bterm * Q[e - 1] : Poly<K>();
  }
  if (!(F[0] - carry).is_zero()) throw std::domain_error("inexact division by a linear form");
  typename Poly<K>::Map acc;
  for (int e = 0; e < d; ++e)
    for (const auto& [m, c] : Q[e].terms()) acc.emplace(m.times(a, e), c);
  return Poly<K>::from_map(std::move(acc));
}

inline Poly<Fp> reduce_mod_p(const Poly<Rational>& f) {
  std::vector<Poly<Fp>::Term> t;
  for (const auto& [m, c] : f.terms()) t.push_back({m, to_fp(c)});
  return Poly<Fp>::from_terms(std::move(t));
}

}  // namespace amen
