#include "ring/relations.hpp"

#include <cmath>

namespace amen {

QPoly relation_c(int p) {
  auto c = [](int q) { return detail::gen_c<Rational>(q); };
  QPoly r = c(p) * c(p);
  for (int i = 1; i <= p; ++i) r += c(p + i) * c(p - i) * Rational(i % 2 ? -2 : 2);
  return r;
}

QPoly relation_b(int p) {
  auto b = [](int q) {
    if (q < 0) return QPoly();
    if (q == 0) return QPoly::constant(1);
    return QPoly::var(bv(q));
  };
  QPoly r = b(p) * b(p);
  for (int i = 1; i <= p - 1; ++i) r += b(p + i) * b(p - i) * Rational(i % 2 ? -2 : 2);
  r += b(2 * p) * Rational(p % 2 ? -1 : 1);
  return r;
}

std::vector<QPoly> q_functions_z(int M, int max_degree) {
  std::vector<QPoly> q(max_degree + 1);
  q[0] = QPoly::constant(1);
  for (int i = 1; i <= M; ++i) {
    const QPoly z = QPoly::var(zv(i));
    std::vector<QPoly> zp(max_degree + 1);
    zp[0] = QPoly::constant(1);
    for (int j = 1; j <= max_degree; ++j) zp[j] = zp[j - 1] * z;
    std::vector<QPoly> next(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
      next[d] = q[d];
      for (int j = 1; j <= d; ++j) next[d] += zp[j] * q[d - j] * Rational(2);
    }
    q = std::move(next);
  }
  return q;
}

QPoly specialize_z(const QPoly& f, int M) {
  const int deg = std::max(f.degree(), 0);
  const std::vector<QPoly> q = q_functions_z(M, deg);
  return f.substitute([&](Var v) -> std::optional<QPoly> {
    const int i = var_index(v);
    switch (var_kind(v)) {
      case VarKind::C: return q.at(i);
      case VarKind::B: return q.at(i) * Rational(1, 2);
      case VarKind::P: {
        QPoly s;
        for (int j = 1; j <= M; ++j) s += QPoly::var(zv(j), i);
        return s;
      }
      default: return std::nullopt;
    }
  });
}

int trials_needed(int degree, uint64_t prime, int bits) {
  if (degree <= 0) return 1;
  const double per = std::log2(static_cast<double>(prime)) - std::log2(static_cast<double>(degree));
  if (per <= 0) throw std::invalid_argument("field too small for the degree");
  return std::max(2, static_cast<int>(std::ceil(bits / per)));
}

Fp random_fp(std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> dist(0, Fp::modulus() - 1);
  return Fp::raw(dist(rng));
}

RandomPoint RandomPoint::draw(std::mt19937_64& rng, int vars, int num_z, int max_degree) {
  RandomPoint pt;
  pt.rng = &rng;
  for (int i = 0; i <= vars; ++i) {
    pt.x.push_back(random_fp(rng));
    pt.y.push_back(random_fp(rng));
    pt.t.push_back(random_fp(rng));
  }
  for (int i = 0; i < num_z; ++i) pt.z.push_back(random_fp(rng));
  // c_q = [t^q] prod (1 + z t)/(1 - z t)
  pt.c.assign(max_degree + 1, Fp(0));
  pt.c[0] = Fp(1);
  for (const Fp& z : pt.z) {
    std::vector<Fp> next(pt.c);
    for (int d = 1; d <= max_degree; ++d) {
      Fp zp(1);
      for (int j = 1; j <= d; ++j) {
        zp *= z;
        next[d] += Fp(2) * zp * pt.c[d - j];
      }
    }
    pt.c = std::move(next);
  }
  pt.p.assign(max_degree + 1, Fp(0));
  for (const Fp& z : pt.z) {
    Fp zp(1);
    for (int k = 1; k <= max_degree; ++k) {
      zp *= z;
      pt.p[k] += zp;
    }
  }
  return pt;
}

Fp RandomPoint::value(Var v) {
  const int i = var_index(v);
  auto at = [&](std::vector<Fp>& vs) {
    while (static_cast<int>(vs.size()) <= i) vs.push_back(random_fp(*rng));
    return vs[i];
  };
  switch (var_kind(v)) {
    case VarKind::X: return at(x);
    case VarKind::Y: return at(y);
    case VarKind::T: return at(t);
    case VarKind::Z: return at(z);
    case VarKind::C:
      if (i >= static_cast<int>(c.size())) throw std::out_of_range("degree bound exceeded for c_p");
      return c[i];
    case VarKind::B:
      if (i >= static_cast<int>(c.size())) throw std::out_of_range("degree bound exceeded for b_p");
      return c[i] * Fp(2).inv();
    case VarKind::P:
      if (i >= static_cast<int>(p.size())) throw std::out_of_range("degree bound exceeded for p_k");
      return p[i];
    case VarKind::S: {
      auto it = symbols.find(v);
      if (it == symbols.end()) it = symbols.emplace(v, random_fp(*rng)).first;
      return it->second;
    }
  }
  return Fp(0);
}

EqResult eq_mod_relations_detail(const RelationContext& ctx, const QPoly& f, const QPoly& g) {
  const QPoly diff = f - g;
  EqResult res;
  res.degree = diff.degree();
  if (ctx.num_z > 0 && res.degree > ctx.num_z && ctx.flavor != Flavor::A)
    throw std::out_of_range("degree bound exceeded: deg " + std::to_string(res.degree) + " > M = " +
                            std::to_string(ctx.num_z));
  if (diff.is_zero()) {
    res.equal = true;
    return res;
  }
  if (ctx.prime == 0) {
    res.trials = 0;
    res.equal = ctx.flavor == Flavor::A ? false : to_power_sums(diff).is_zero();
    return res;
  }
  PrimeScope scope(ctx.prime);
  std::mt19937_64 rng(ctx.seed);
  const int M = std::max(ctx.num_z, res.degree);
  const int vars = std::max({diff.max_index(VarKind::X), diff.max_index(VarKind::Y), diff.max_index(VarKind::T)});
  res.trials = trials_needed(res.degree, ctx.prime);
  const FPoly reduced = reduce_mod_p(diff);
  for (int t = 0; t < res.trials; ++t) {
    RandomPoint pt = RandomPoint::draw(rng, vars, M, res.degree);
    if (!Field<Fp>::is_zero(reduced.eval([&](Var v) { return pt.value(v); }))) {
      res.equal = false;
      return res;
    }
  }
  res.equal = true;
  return res;
}

}  // namespace amen
