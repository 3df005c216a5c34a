#pragma once

#include <cstdint>
#include <random>

#include "ring/actions.hpp"
#include "ring/blocks.hpp"
#include "ring/poly.hpp"

namespace amen {

struct RelationContext {
  Flavor flavor = Flavor::A;
  int num_z = 0;       // M; 0 picks the degree of the difference
  uint64_t prime = 0;  // 0 = exact comparison
  uint64_t seed = 1;
};

// Sets the prime of Fp for the lifetime of the scope.
class PrimeScope {
 public:
  explicit PrimeScope(uint64_t p) : saved_(Fp::modulus()) {
    if (p != 0) Fp::modulus() = p;
  }
  ~PrimeScope() { Fp::modulus() = saved_; }
  PrimeScope(const PrimeScope&) = delete;
  PrimeScope& operator=(const PrimeScope&) = delete;

 private:
  uint64_t saved_;
};

constexpr uint64_t kDefaultPrime = (uint64_t{1} << 61) - 1;

// The p-th defining relation of Gamma (in c) and of Gamma' (in b).
QPoly relation_c(int p);
QPoly relation_b(int p);

// c_q -> Q_q, b_q -> Q_q / 2, written in odd power sums.
template <class K>
Poly<K> to_power_sums(const Poly<K>& f) {
  if (!f.contains_kind(VarKind::C) && !f.contains_kind(VarKind::B)) return f;
  return f.substitute([](Var v) -> std::optional<Poly<K>> {
    if (var_kind(v) == VarKind::C) return q_function_ps<K>(var_index(v));
    if (var_kind(v) == VarKind::B) return q_function_ps<K>(var_index(v)) * Field<K>::from_rational(Rational(1, 2));
    return std::nullopt;
  });
}

// Q_q(z_1..z_M) from the series prod (1 + z t)/(1 - z t).
std::vector<QPoly> q_functions_z(int M, int max_degree);
// c_q -> Q_q(z), b_q -> Q_q(z)/2 and p_k -> sum z^k, symbolically.
QPoly specialize_z(const QPoly& f, int M);

// Number of independent evaluations needed for error below 2^-bits.
int trials_needed(int degree, uint64_t prime, int bits = 80);

struct EqResult {
  bool equal = false;
  int trials = 0;
  int degree = 0;
};

// Equality in Gamma[X,Y] / Gamma'[X,Y] (or Q[X,Y] for flavor A).
EqResult eq_mod_relations_detail(const RelationContext& ctx, const QPoly& f, const QPoly& g);
inline bool eq_mod_relations(const RelationContext& ctx, const QPoly& f, const QPoly& g) {
  return eq_mod_relations_detail(ctx, f, g).equal;
}

// Random point used by the randomized checks: values for every variable kind.
struct RandomPoint {
  std::vector<Fp> x, y, t, z;
  absl::flat_hash_map<Var, Fp> symbols;
  std::vector<Fp> c;  // c_q = Q_q(z)
  std::vector<Fp> p;  // p_k = sum z^k
  std::mt19937_64* rng = nullptr;

  static RandomPoint draw(std::mt19937_64& rng, int vars, int num_z, int max_degree);
  Fp value(Var v);
};

Fp random_fp(std::mt19937_64& rng);

}  // namespace amen
