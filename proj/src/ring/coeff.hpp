#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amen {

using Rational = mpq_class;

// Element of Z/pZ for a runtime prime p < 2^62.
struct Fp {
  uint64_t v = 0;

  static uint64_t& modulus() {
    static thread_local uint64_t p = (uint64_t{1} << 61) - 1;
    return p;
  }

  Fp() = default;
  explicit Fp(int64_t a) {
    const uint64_t p = modulus();
    int64_t r = a % static_cast<int64_t>(p);
    if (r < 0) r += static_cast<int64_t>(p);
    v = static_cast<uint64_t>(r);
  }
  static Fp raw(uint64_t x) {
    Fp f;
    f.v = x;
    return f;
  }

  friend Fp operator+(Fp a, Fp b) {
    uint64_t s = a.v + b.v;
    if (s >= modulus()) s -= modulus();
    return raw(s);
  }
  friend Fp operator-(Fp a, Fp b) { return raw(a.v >= b.v ? a.v - b.v : a.v + modulus() - b.v); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % modulus()));
  }
  Fp operator-() const { return raw(v == 0 ? 0 : modulus() - v); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  Fp pow(uint64_t e) const {
    Fp r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (v == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(modulus() - 2);
  }
};

inline Fp to_fp(const Rational& q) {
  mpz_class p(std::to_string(Fp::modulus()));
  mpz_class n = q.get_num() % p, d = q.get_den() % p;
  if (n < 0) n += p;
  if (d == 0) throw std::domain_error("denominator divisible by the field prime");
  Fp a = Fp::raw(std::stoull(n.get_str())), b = Fp::raw(std::stoull(d.get_str()));
  return a * b.inv();
}

// Uniform interface over the two coefficient domains.
template <class K>
struct Field;

template <>
struct Field<Rational> {
  static Rational from_int(int64_t a) { return Rational(static_cast<long>(a)); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational inv(const Rational& a) {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  static std::string str(const Rational& a) { return a.get_str(); }
};

template <>
struct Field<Fp> {
  static Fp from_int(int64_t a) { return Fp(a); }
  static Fp from_rational(const Rational& q) { return to_fp(q); }
  static bool is_zero(const Fp& a) { return a.v == 0; }
  static Fp inv(const Fp& a) { return a.inv(); }
  static std::string str(const Fp& a) { return std::to_string(a.v); }
};

bool is_probable_prime(uint64_t p);

}  // namespace amen
