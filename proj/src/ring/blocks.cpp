#include "ring/blocks.hpp"

namespace amen {

NumericEnv::NumericEnv(std::vector<Fp> x, std::vector<Fp> y, std::vector<Fp> z, int max_degree)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), max_degree_(max_degree) {
  c_.assign(max_degree + 1, Fp(0));
  c_[0] = Fp(1);
  for (const Fp& zi : z_) {
    std::vector<Fp> next(c_);
    for (int d = 1; d <= max_degree; ++d) {
      Fp zp(1);
      for (int j = 1; j <= d; ++j) {
        zp *= zi;
        next[d] += Fp(2) * zp * c_[d - j];
      }
    }
    c_ = std::move(next);
  }
}

Fp NumericEnv::c(int q) const {
  if (q < 0) return Fp(0);
  if (q > max_degree_) throw std::out_of_range("degree bound exceeded in point evaluation");
  return c_[q];
}

Fp NumericEnv::power_sum(int k) const {
  Fp s(0);
  for (const Fp& z : z_) s += z.pow(k);
  return s;
}

Fp NumericEnv::sym(SymKind kind, int band, int degree, bool y_side) const {
  if (degree < 0) return Fp(0);
  if (band < 0) kind = kind == SymKind::E ? SymKind::H : SymKind::E, band = -band;
  if (band == 0) return degree == 0 ? Fp(1) : Fp(0);
  const std::array<int, 4> key{static_cast<int>(kind), band, degree, y_side ? 1 : 0};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const std::vector<Fp>& src = y_side ? y_ : x_;
  if (band > static_cast<int>(src.size())) throw std::out_of_range("alphabet too short for point evaluation");
  std::vector<Fp> letters;
  for (int i = 0; i < band; ++i) letters.push_back(y_side ? -src[i] : src[i]);
  Fp v = sym_values<Fp>(kind, letters, degree)[degree];
  cache_.emplace(key, v);
  return v;
}

}  // namespace amen
