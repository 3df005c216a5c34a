#include "schubert_oracle/oracle.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "flagged_formulas/formulas.hpp"
#include "json.hpp"
#include "ring/relations.hpp"

namespace amen {

namespace fs = std::filesystem;

Flavor flavor_of(LieType t) {
  switch (t) {
    case LieType::A: return Flavor::A;
    case LieType::B:
    case LieType::C: return Flavor::BC;
    case LieType::D: return Flavor::D;
  }
  return Flavor::A;
}

namespace {

// A plan with explicit rows, evaluated through the same trie as the formulas.
FormulaPlan seed_plan(LieType t, int n) {
  FormulaPlan plan;
  plan.w = longest_element(t, n);
  if (t == LieType::A) {
    plan.ell = n - 1;
    for (int i = 1; i < n; ++i) {
      plan.upper.push_back(i);
      plan.lower.push_back(n - i);
      plan.lambda.push_back(n - i);
    }
    for (const auto& [idx, c] : collect_by_index(expand_RD({}, plan.ell, plan.lambda))) {
      PlannedTerm term{Rational(static_cast<long>(c)), {}};
      for (int i = 1; i <= plan.ell; ++i) term.rows.push_back(BlockKey{BlockKind::H, i, n - i, idx[i - 1], 0});
      plan.terms.push_back(std::move(term));
    }
    return plan;
  }
  if (t == LieType::B || t == LieType::C) {
    plan.ell = n;
    for (int i = 1; i <= n; ++i) {
      plan.upper.push_back(n - i);
      plan.lower.push_back(i - n);
      plan.lambda.push_back(2 * (n - i) + 1);
    }
    plan.denom = all_pairs(n);
    for (const auto& [idx, c] : collect_by_index(expand_RD(plan.denom, plan.ell, plan.lambda))) {
      PlannedTerm term{Rational(static_cast<long>(c)), {}};
      for (int i = 1; i <= n; ++i) term.rows.push_back(BlockKey{BlockKind::C, n - i, i - n, idx[i - 1], 0});
      plan.terms.push_back(std::move(term));
    }
    return plan;
  }
  // D: k = 1, superscripts nu on the left and (1-n, ..., -1) on the right
  const ShapeData s = shape(plan.w);
  plan.shape = s;
  plan.ell = n - 1;
  for (int i = 1; i < n; ++i) {
    if (s.lambda_at(i) != 2 * (n - i)) throw std::logic_error("unexpected shape of the longest element");
    plan.lambda.push_back(2 * (n - i));
    plan.upper.push_back(i <= static_cast<int>(s.nu.size()) ? s.nu[i - 1] : 0);
    plan.lower.push_back(i - n);
  }
  plan.denom = all_pairs(plan.ell);
  mpz_class den = 1;
  den <<= (n - 1);
  plan.prefactor = Rational(mpz_class(1), den);
  std::map<std::vector<BlockKey>, int64_t> acc;
  for (const auto& term : expand_RD(plan.denom, plan.ell, plan.lambda))
    acc[star_apply(s, term, plan.upper, plan.lower)] += term.coeff;
  for (auto& [rows, c] : acc)
    if (c) plan.terms.push_back(PlannedTerm{Rational(static_cast<long>(c)), rows});
  return plan;
}

}  // namespace

template <class K>
Poly<K> top_polynomial(LieType t, int n, const PolyEnv<K>& env) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (n == 1 && (t == LieType::A || t == LieType::D)) return Poly<K>::constant(1);
  return evaluate_plan_as(seed_plan(t, n), env);
}

template Poly<Rational> top_polynomial(LieType, int, const PolyEnv<Rational>&);
template Poly<Fp> top_polynomial(LieType, int, const PolyEnv<Fp>&);

QPoly top_polynomial(LieType t, int n) {
  PolyEnv<Rational> env(default_cmode(t));
  return top_polynomial(t, n, env);
}

QPoly staircase_product(int n) {
  QPoly f = QPoly::constant(1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) f *= QPoly::var(xv(i)) - QPoly::var(yv(j));
  return f;
}

std::vector<int> ascent_path(const SignedWord& w, PathChoice choice) {
  const SignedWord top = longest_element(w.type, w.n());
  std::vector<int> path;
  SignedWord v = w;
  auto refl = simple_reflections(w.type, w.n());
  if (choice == PathChoice::Largest) std::reverse(refl.begin(), refl.end());
  while (!(v == top)) {
    const int l = length(v);
    bool moved = false;
    for (int i : refl) {
      SignedWord u = right_mult(v, i);
      if (length(u) > l) {
        path.push_back(i);
        v = u;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("no ascent below the longest element");
  }
  return path;
}

// ---- disk cache

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::optional<std::string> DiskCache::env_dir() {
  const char* d = std::getenv("AMENABLE_CACHE_DIR");
  if (!d || !*d) return std::nullopt;
  return std::string(d);
}

std::string DiskCache::shard_name(const std::string& variant, LieType t, int n) const {
  return variant + "_" + type_char(t) + std::to_string(n) + ".bin";
}

DiskCache::Shard& DiskCache::shard(const std::string& variant, LieType t, int n) {
  const std::string name = shard_name(variant, t, n);
  {
    std::shared_lock lk(mu_);
    auto it = shards_.find(name);
    if (it != shards_.end() && it->second.loaded) return it->second;
  }
  std::unique_lock lk(mu_);
  Shard& s = shards_[name];
  if (!s.loaded) load(name, s);
  return s;
}

namespace {

template <class T>
void put_raw(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
template <class T>
T get_raw(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!is) throw std::runtime_error("truncated cache shard");
  return v;
}
constexpr uint32_t kMagic = 0x434f4d41;  // "AMOC"

}  // namespace

void DiskCache::load(const std::string& name, Shard& s) {
  s.loaded = true;
  std::ifstream is(fs::path(dir_) / name, std::ios::binary);
  if (!is) return;
  if (get_raw<uint32_t>(is) != kMagic || get_raw<uint32_t>(is) != kVersion)
    throw std::runtime_error("cache shard " + name + " has a foreign format; remove it");
  const uint32_t count = get_raw<uint32_t>(is);
  for (uint32_t e = 0; e < count; ++e) {
    std::vector<int> word(get_raw<uint32_t>(is));
    for (int& x : word) x = get_raw<int32_t>(is);
    const uint32_t nt = get_raw<uint32_t>(is);
    std::vector<QPoly::Term> terms;
    terms.reserve(nt);
    for (uint32_t k = 0; k < nt; ++k) {
      Mono m;
      const uint32_t nf = get_raw<uint32_t>(is);
      for (uint32_t j = 0; j < nf; ++j) m.f.push_back(get_raw<uint32_t>(is));
      std::string c(get_raw<uint32_t>(is), '\0');
      is.read(c.data(), static_cast<std::streamsize>(c.size()));
      if (!is) throw std::runtime_error("truncated cache shard");
      terms.push_back({std::move(m), Rational(c)});
    }
    s.entries.emplace(std::move(word), QPoly::from_terms(std::move(terms)));
  }
}

void DiskCache::save(const std::string& name, Shard& s) {
  std::lock_guard lk(*s.write_lock);
  if (!s.dirty) return;
  const fs::path tmp = fs::path(dir_) / (name + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    put_raw<uint32_t>(os, kMagic);
    put_raw<uint32_t>(os, kVersion);
    put_raw<uint32_t>(os, static_cast<uint32_t>(s.entries.size()));
    for (const auto& [word, f] : s.entries) {
      put_raw<uint32_t>(os, static_cast<uint32_t>(word.size()));
      for (int x : word) put_raw<int32_t>(os, x);
      put_raw<uint32_t>(os, static_cast<uint32_t>(f.size()));
      for (const auto& [m, c] : f.terms()) {
        put_raw<uint32_t>(os, static_cast<uint32_t>(m.f.size()));
        for (uint32_t x : m.f) put_raw<uint32_t>(os, x);
        const std::string str = c.get_str();
        put_raw<uint32_t>(os, static_cast<uint32_t>(str.size()));
        os.write(str.data(), static_cast<std::streamsize>(str.size()));
      }
    }
    if (!os) throw std::runtime_error("failed writing cache shard " + tmp.string());
  }
  fs::rename(tmp, fs::path(dir_) / name);
  s.dirty = false;
}

void DiskCache::write_index() {
  nlohmann::json idx;
  idx["version"] = kVersion;
  idx["shards"] = nlohmann::json::object();
  for (const auto& [name, s] : shards_) {
    if (!fs::exists(fs::path(dir_) / name)) continue;
    idx["shards"][name] = {{"entries", s.entries.size()}};
  }
  const fs::path tmp = fs::path(dir_) / "index.json.tmp";
  std::ofstream(tmp) << idx.dump(2) << "\n";
  fs::rename(tmp, fs::path(dir_) / "index.json");
}

std::optional<QPoly> DiskCache::get(const std::string& variant, const SignedWord& w) {
  Shard& s = shard(variant, w.type, w.n());
  std::shared_lock lk(mu_);
  auto it = s.entries.find(w.w);
  if (it == s.entries.end()) return std::nullopt;
  return it->second;
}

void DiskCache::put(const std::string& variant, const SignedWord& w, const QPoly& f) {
  for (const auto& [m, c] : f.terms())
    for (uint32_t x : m.f)
      if (var_kind(Mono::var_of(x)) == VarKind::S) throw std::invalid_argument("formal symbols are not cacheable");
  Shard& s = shard(variant, w.type, w.n());
  std::unique_lock lk(mu_);
  if (s.entries.emplace(w.w, f).second) s.dirty = true;
}

void DiskCache::flush() {
  std::unique_lock lk(mu_);
  for (auto& [name, s] : shards_) save(name, s);
  write_index();
}

size_t DiskCache::size(const std::string& variant, LieType t, int n) {
  Shard& s = shard(variant, t, n);
  std::shared_lock lk(mu_);
  return s.entries.size();
}

// ---- oracle

template <class K>
SchubertOracle<K>::SchubertOracle(CMode bc_mode, std::optional<std::vector<K>> numeric_y)
    : bc_mode_(bc_mode), y_(std::move(numeric_y)) {
  for (LieType t : {LieType::A, LieType::C, LieType::D}) {
    auto env = std::make_unique<PolyEnv<K>>(mode_for(t));
    if (y_) env->set_numeric_y(*y_);
    envs_[t] = std::move(env);
  }
}

template <class K>
CMode SchubertOracle<K>::mode_for(LieType t) const {
  if (t == LieType::A) return CMode::None;
  if (t == LieType::D && bc_mode_ == CMode::FreeC) return CMode::FreeB;
  return bc_mode_;
}

template <class K>
const PolyEnv<K>& SchubertOracle<K>::env_for(LieType t) const {
  return *envs_.at(t == LieType::B ? LieType::C : t);
}

template <class K>
std::string SchubertOracle<K>::variant(LieType t) const {
  switch (mode_for(t)) {
    case CMode::None: return "plain";
    case CMode::FreeC: return "freec";
    case CMode::FreeB: return "freeb";
    case CMode::PowerSum: return "psum";
  }
  return "?";
}

template <class K>
Poly<K> SchubertOracle<K>::top(LieType t, int n) {
  if (t == LieType::B) t = LieType::C;
  return top_polynomial(t, n, env_for(t));
}

template <class K>
Poly<K> SchubertOracle<K>::compute(const SignedWord& w, PathChoice choice, bool use_memo) {
  const auto key = std::make_pair(w.type, w.w);
  if (use_memo) {
    std::lock_guard lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if constexpr (std::is_same_v<K, Rational>) {
      if (disk_ && !y_)
        if (auto f = disk_->get(variant(w.type), w)) return memo_.emplace(key, *f).first->second;
    }
  }
  Poly<K> f;
  if (w == longest_element(w.type, w.n())) {
    f = top(w.type, w.n());
  } else {
    const int i = ascent_path(w, choice).front();
    f = ddiff(flavor_of(w.type), i, Side::X, compute(right_mult(w, i), choice, use_memo));
  }
  if (use_memo) {
    std::lock_guard lk(mu_);
    memo_.emplace(key, f);
    if constexpr (std::is_same_v<K, Rational>) {
      if (disk_ && !y_) disk_->put(variant(w.type), w, f);
    }
  }
  return f;
}

template <class K>
Poly<K> SchubertOracle<K>::schubert(const SignedWord& w) {
  validate(w);
  if (w.type != LieType::B) return compute(w, PathChoice::Smallest, true);
  SignedWord c = w;
  c.type = LieType::C;
  mpz_class den = 1;
  den <<= num_negative(w);
  return compute(c, PathChoice::Smallest, true) * Field<K>::from_rational(Rational(mpz_class(1), den));
}

template <class K>
Poly<K> SchubertOracle<K>::schubert_along(const SignedWord& w, PathChoice choice) {
  validate(w);
  SignedWord c = w;
  if (c.type == LieType::B) c.type = LieType::C;
  Poly<K> f = compute(c, choice, false);
  if (w.type == LieType::B) {
    mpz_class den = 1;
    den <<= num_negative(w);
    f = f * Field<K>::from_rational(Rational(mpz_class(1), den));
  }
  return f;
}

template <class K>
size_t SchubertOracle<K>::memo_size() const {
  std::lock_guard lk(mu_);
  return memo_.size();
}

template class SchubertOracle<Rational>;
template class SchubertOracle<Fp>;

ExactOracle& exact_oracle() {
  static ExactOracle oracle(CMode::FreeC);
  static std::unique_ptr<DiskCache> disk = [] {
    auto d = DiskCache::env_dir();
    return d ? std::make_unique<DiskCache>(*d) : nullptr;
  }();
  static bool attached = [] {
    if (disk) oracle.attach_disk(disk.get());
    std::atexit([] {
      if (disk) disk->flush();
    });
    return true;
  }();
  (void)attached;
  return oracle;
}

QPoly schubert(const SignedWord& w) { return exact_oracle().schubert(w); }

std::vector<Fp> draw_y(uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::vector<Fp> y;
  for (int i = 0; i < n; ++i) y.push_back(random_fp(rng));
  return y;
}

}  // namespace amen
