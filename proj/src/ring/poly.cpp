#include "ring/poly.hpp"

#include <mutex>

namespace amen {

namespace {

struct SymbolTable {
  std::mutex mu;
  std::vector<std::string> names;
  std::vector<int> degrees;
  absl::flat_hash_map<std::string, Var> by_name;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

Var symbol(const std::string& name, int degree) {
  SymbolTable& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.by_name.find(name);
  if (it != t.by_name.end()) {
    if (t.degrees[var_index(it->second)] != degree)
      throw std::invalid_argument("symbol '" + name + "' re-registered with another degree");
    return it->second;
  }
  if (t.names.size() >= 0xfff) throw std::length_error("symbol table full");
  Var v = make_var(VarKind::S, static_cast<int>(t.names.size()));
  t.names.push_back(name);
  t.degrees.push_back(degree);
  t.by_name.emplace(name, v);
  return v;
}

const std::string& symbol_name(Var v) {
  SymbolTable& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.at(var_index(v));
}

std::optional<Var> find_symbol(const std::string& name) {
  SymbolTable& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.by_name.find(name);
  if (it == t.by_name.end()) return std::nullopt;
  return it->second;
}

int var_degree(Var v) {
  switch (var_kind(v)) {
    case VarKind::C:
    case VarKind::B:
    case VarKind::P:
      return var_index(v);
    case VarKind::S: {
      SymbolTable& t = table();
      std::lock_guard<std::mutex> lock(t.mu);
      return t.degrees.at(var_index(v));
    }
    default:
      return 1;
  }
}

std::string var_name(Var v) {
  const int i = var_index(v);
  switch (var_kind(v)) {
    case VarKind::X: return "x" + std::to_string(i);
    case VarKind::Y: return "y" + std::to_string(i);
    case VarKind::T: return "t[" + std::to_string(i) + "]";
    case VarKind::Z: return "z" + std::to_string(i);
    case VarKind::C: return "c" + std::to_string(i);
    case VarKind::B: return "b" + std::to_string(i);
    case VarKind::P: return "p" + std::to_string(i);
    case VarKind::S: return symbol_name(v);
  }
  return "?";
}

// Display order groups the ring generators before the alphabets.
static int display_rank(Var v) {
  switch (var_kind(v)) {
    case VarKind::C: return 0;
    case VarKind::B: return 1;
    case VarKind::P: return 2;
    case VarKind::S: return 3;
    case VarKind::X: return 4;
    case VarKind::Y: return 5;
    case VarKind::T: return 6;
    case VarKind::Z: return 7;
  }
  return 8;
}

static std::pair<int, int> display_slot(Var v) {
  int idx = var_kind(v) == VarKind::S ? static_cast<int>(symbol_name(v).size()) * 4096 + var_index(v)
                                      : var_index(v);
  return {display_rank(v), idx};
}

static std::vector<std::pair<std::pair<int, int>, int>> display_key(const Mono& m) {
  std::vector<std::pair<std::pair<int, int>, int>> k;
  for (uint32_t x : m.f) k.push_back({display_slot(Mono::var_of(x)), Mono::exp_of(x)});
  std::sort(k.begin(), k.end());
  return k;
}

bool graded_lex_before(const Mono& a, const Mono& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  auto ka = display_key(a), kb = display_key(b);
  size_t i = 0;
  for (; i < ka.size() && i < kb.size(); ++i) {
    if (ka[i].first != kb[i].first) return ka[i].first < kb[i].first;
    if (ka[i].second != kb[i].second) return ka[i].second > kb[i].second;
  }
  return ka.size() > kb.size() && i == kb.size();
}

std::vector<std::pair<Var, int>> mono_factors(const Mono& m) {
  std::vector<std::pair<std::pair<std::pair<int, int>, int>, Var>> order;
  for (uint32_t x : m.f) {
    Var v = Mono::var_of(x);
    order.push_back({{display_slot(v), Mono::exp_of(x)}, v});
  }
  std::sort(order.begin(), order.end());
  std::vector<std::pair<Var, int>> out;
  for (const auto& [key, v] : order) out.push_back({v, key.second});
  return out;
}

std::string mono_str(const Mono& m) {
  std::string s;
  for (const auto& [v, e] : mono_factors(m)) {
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool is_probable_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  uint64_t d = p - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  auto mulmod = [p](uint64_t a, uint64_t b) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  };
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = 1, b = a, e = d;
    while (e) {
      if (e & 1) x = mulmod(x, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    if (x == 1 || x == p - 1) continue;
    bool witness = true;
    for (int i = 1; i < r && witness; ++i) {
      x = mulmod(x, x);
      if (x == p - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace amen
