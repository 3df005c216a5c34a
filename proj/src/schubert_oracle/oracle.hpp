#pragma once

// Double Schubert polynomials by divided differences from the longest element.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ring/actions.hpp"
#include "ring/blocks.hpp"
#include "ring/poly.hpp"
#include "weyl_core/weyl.hpp"

namespace amen {

Flavor flavor_of(LieType t);

// Seed polynomial of the longest element of the rank-n group.
// B uses the C seed; the 2^{-s} scaling is applied by schubert().
template <class K>
Poly<K> top_polynomial(LieType t, int n, const PolyEnv<K>& env);
QPoly top_polynomial(LieType t, int n);

// The A seed as the product of (x_i - y_j) over i + j <= n.
QPoly staircase_product(int n);

// Reflections s_{i_1}, ..., s_{i_l} with w s_{i_1} ... s_{i_l} = w0, chosen
// greedily (smallest or largest ascent first).
enum class PathChoice { Smallest, Largest };
std::vector<int> ascent_path(const SignedWord& w, PathChoice choice = PathChoice::Smallest);

// Per (type, n) binary shards plus index.json under a directory.
class DiskCache {
 public:
  static constexpr uint32_t kVersion = 1;
  explicit DiskCache(std::string dir);
  // Directory from AMENABLE_CACHE_DIR, if set.
  static std::optional<std::string> env_dir();

  std::optional<QPoly> get(const std::string& variant, const SignedWord& w);
  void put(const std::string& variant, const SignedWord& w, const QPoly& f);
  void flush();
  size_t size(const std::string& variant, LieType t, int n);
  const std::string& dir() const { return dir_; }

 private:
  struct Shard {
    std::map<std::vector<int>, QPoly> entries;
    bool loaded = false, dirty = false;
    std::unique_ptr<std::mutex> write_lock = std::make_unique<std::mutex>();
  };
  Shard& shard(const std::string& variant, LieType t, int n);
  std::string shard_name(const std::string& variant, LieType t, int n) const;
  void load(const std::string& name, Shard& s);
  void save(const std::string& name, Shard& s);
  void write_index();

  std::string dir_;
  std::shared_mutex mu_;
  std::map<std::string, Shard> shards_;
};

// Polynomial representatives in the free ring. K = Rational gives the
// exact oracle with c_p (b_p in type D) as variables; K = Fp is used with
// power sums and numeric y for the randomized sweeps.
template <class K>
class SchubertOracle {
 public:
  // cmode for types B/C (D uses FreeB in place of FreeC).
  SchubertOracle(CMode bc_mode, std::optional<std::vector<K>> numeric_y = std::nullopt);

  Poly<K> schubert(const SignedWord& w);
  // Recursion along the chosen path without sharing the memo.
  Poly<K> schubert_along(const SignedWord& w, PathChoice choice);
  Poly<K> top(LieType t, int n);
  void attach_disk(DiskCache* disk) { disk_ = disk; }
  size_t memo_size() const;
  CMode mode_for(LieType t) const;
  const PolyEnv<K>& env_for(LieType t) const;

 private:
  Poly<K> compute(const SignedWord& w, PathChoice choice, bool use_memo);
  std::string variant(LieType t) const;

  CMode bc_mode_;
  std::optional<std::vector<K>> y_;
  std::map<LieType, std::unique_ptr<PolyEnv<K>>> envs_;
  std::map<std::pair<LieType, std::vector<int>>, Poly<K>> memo_;
  mutable std::recursive_mutex mu_;
  DiskCache* disk_ = nullptr;
};

using ExactOracle = SchubertOracle<Rational>;
using FpOracle = SchubertOracle<Fp>;

// Process-wide exact oracle, with the disk cache attached when the
// environment variable names a directory.
ExactOracle& exact_oracle();
QPoly schubert(const SignedWord& w);

// Random y values for the randomized oracle.
std::vector<Fp> draw_y(uint64_t seed, int n);

extern template class SchubertOracle<Rational>;
extern template class SchubertOracle<Fp>;

}  // namespace amen
