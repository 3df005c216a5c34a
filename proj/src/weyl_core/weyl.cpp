#include "weyl_core/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace amen {

char type_char(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

LieType parse_type(const std::string& s) {
  if (s == "A" || s == "a") return LieType::A;
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  throw std::invalid_argument("unknown Lie type '" + s + "'");
}

SignedWord::SignedWord(LieType t, std::vector<int> entries) : type(t), w(std::move(entries)) {}

bool SignedWord::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (w[i] != i + 1) return false;
  return true;
}

std::string SignedWord::str() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << w[i];
  return os.str();
}

std::string SignedWord::pretty() const { return "(" + str() + ")"; }

void validate(const SignedWord& w) {
  const int n = w.n();
  std::vector<char> seen(n + 1, 0);
  int neg = 0;
  for (int v : w.w) {
    int a = std::abs(v);
    if (v == 0 || a > n) throw std::invalid_argument("entry out of range in word " + w.pretty());
    if (seen[a]) throw std::invalid_argument("repeated absolute value in word " + w.pretty());
    seen[a] = 1;
    if (v < 0) ++neg;
  }
  if (w.type == LieType::A && neg > 0)
    throw std::invalid_argument("type A words cannot carry signs: " + w.pretty());
  if (w.type == LieType::D && neg % 2 != 0)
    throw std::invalid_argument("type D words need an even number of negative entries: " + w.pretty());
}

SignedWord parse_word(LieType t, const std::string& csv) {
  std::vector<int> entries;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in word '" + csv + "'");
    tok = tok.substr(b, e - b + 1);
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad entry '" + tok + "' in word '" + csv + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad entry '" + tok + "' in word '" + csv + "'");
    entries.push_back(v);
  }
  if (entries.empty()) throw std::invalid_argument("empty word");
  SignedWord w(t, entries);
  validate(w);
  return w;
}

SignedWord identity(LieType t, int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return SignedWord(t, e);
}

SignedWord longest_element(LieType t, int n) {
  std::vector<int> e(n);
  switch (t) {
    case LieType::A:
      for (int i = 0; i < n; ++i) e[i] = n - i;
      break;
    case LieType::B:
    case LieType::C:
      for (int i = 0; i < n; ++i) e[i] = -(i + 1);
      break;
    case LieType::D:
      for (int i = 0; i < n; ++i) e[i] = -(i + 1);
      if (n % 2 == 1) e[0] = 1;
      break;
  }
  return SignedWord(t, e);
}

SignedWord pad(const SignedWord& w, int n) {
  if (n < w.n()) throw std::invalid_argument("pad: target rank below current rank");
  SignedWord r = w;
  for (int i = w.n() + 1; i <= n; ++i) r.w.push_back(i);
  return r;
}

int length(const SignedWord& w) {
  const int n = w.n();
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.w[i] > w.w[j]) ++inv;
  int extra = 0;
  for (int v : w.w) {
    if (v >= 0) continue;
    if (w.type == LieType::D)
      extra += -v - 1;
    else
      extra += -v;
  }
  return inv + extra;
}

int num_negative(const SignedWord& w) {
  return static_cast<int>(std::count_if(w.w.begin(), w.w.end(), [](int v) { return v < 0; }));
}

static void check_reflection(LieType t, int n, int i) {
  if (i >= 1 && i < n) return;
  if (i == 0 && (t == LieType::B || t == LieType::C) && n >= 1) return;
  if (i == kSBox && t == LieType::D && n >= 2) return;
  throw std::invalid_argument("reflection index " + std::to_string(i) + " not available in type " +
                              std::string(1, type_char(t)) + std::to_string(n));
}

SignedWord right_mult(const SignedWord& w, int i) {
  check_reflection(w.type, w.n(), i);
  SignedWord r = w;
  if (i == 0) {
    r.w[0] = -r.w[0];
  } else if (i == kSBox) {
    int a = r.w[0], b = r.w[1];
    r.w[0] = -b;
    r.w[1] = -a;
  } else {
    std::swap(r.w[i - 1], r.w[i]);
  }
  return r;
}

static int act_value(int i, int v) {
  int a = std::abs(v), s = v < 0 ? -1 : 1;
  if (i == 0) return a == 1 ? -v : v;
  if (i == kSBox) {
    if (a == 1) return -s * 2;
    if (a == 2) return -s * 1;
    return v;
  }
  if (a == i) return s * (i + 1);
  if (a == i + 1) return s * i;
  return v;
}

SignedWord left_mult(int i, const SignedWord& w) {
  check_reflection(w.type, w.n(), i);
  SignedWord r = w;
  for (int& v : r.w) v = act_value(i, v);
  return r;
}

SignedWord compose(const SignedWord& u, const SignedWord& v) {
  if (u.n() != v.n()) throw std::invalid_argument("compose: rank mismatch");
  SignedWord r = v;
  r.type = u.type;
  for (int& x : r.w) {
    int a = std::abs(x);
    x = (x < 0 ? -1 : 1) * u.w[a - 1];
  }
  return r;
}

SignedWord inverse(const SignedWord& w) {
  SignedWord r = w;
  for (int i = 0; i < w.n(); ++i) {
    int v = w.w[i];
    r.w[std::abs(v) - 1] = v < 0 ? -(i + 1) : (i + 1);
  }
  return r;
}

SignedWord from_word(LieType t, int n, const std::vector<int>& reflections) {
  SignedWord r = identity(t, n);
  for (int i : reflections) r = right_mult(r, i);
  return r;
}

std::vector<int> simple_reflections(LieType t, int n) {
  std::vector<int> out;
  if (t == LieType::B || t == LieType::C) out.push_back(0);
  if (t == LieType::D && n >= 2) out.push_back(kSBox);
  for (int i = 1; i < n; ++i) out.push_back(i);
  return out;
}

std::set<int> descents(const SignedWord& w, DescentSide side) {
  std::set<int> out;
  const int l = length(w);
  for (int i : simple_reflections(w.type, w.n())) {
    SignedWord v = side == DescentSide::Right ? right_mult(w, i) : left_mult(i, w);
    if (length(v) < l) out.insert(i);
  }
  return out;
}

bool box_left_descent_by_pattern(const SignedWord& w) {
  int p1 = -1, p2 = -1;
  for (int i = 0; i < w.n(); ++i) {
    if (std::abs(w.w[i]) == 1) p1 = i;
    if (std::abs(w.w[i]) == 2) p2 = i;
  }
  if (p1 < 0 || p2 < 0) return false;
  int v1 = w.w[p1], v2 = w.w[p2];
  if (p1 < p2 && v2 == -2) return true;              // (.. 1^ .. -2 ..)
  if (p2 < p1 && v2 == -2 && v1 == -1) return true;  // (.. -2 .. -1 ..)
  if (p2 < p1 && v2 == 2 && v1 == -1) return true;   // (.. 2 .. -1 ..)
  return false;
}

std::vector<int> a_code(const SignedWord& w) {
  const int n = w.n();
  std::vector<int> g(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.w[j] < w.w[i]) ++g[i];
  return g;
}

SignedWord iota(const SignedWord& w) {
  if (w.type != LieType::D) throw std::invalid_argument("iota is defined on type D words");
  SignedWord r = w;
  r.w[0] = -r.w[0];
  for (int& v : r.w)
    if (std::abs(v) == 1) v = -v;
  return r;
}

int d_type(const SignedWord& w) {
  if (std::abs(w.w[0]) == 1) return 0;
  return w.w[0] > 0 ? 1 : 2;
}

bool is_proper(const SignedWord& w) {
  if (w.type != LieType::D) return true;
  if (std::abs(w.w[0]) <= 2) return true;
  for (int j = 1; j <= w.n(); ++j) {
    if (w[j] != 2) continue;
    if (!(j > 2 && w[j - 1] < 2)) return false;
  }
  return true;
}

int first_descent(const SignedWord& w) {
  const int n = w.n();
  if (w.type == LieType::D) {
    if (n >= 2 && w.w[0] + w.w[1] < 0) return 1;
    for (int i = 1; i < n; ++i)
      if (w[i] > w[i + 1]) return i;
    return 1;
  }
  if (w.type != LieType::A && w.w[0] < 0) return 0;
  for (int i = 1; i < n; ++i)
    if (w[i] > w[i + 1]) return i;
  return 0;
}

bool increasing_up_to(const SignedWord& w, int k) {
  if (k > w.n()) return false;
  if (w.type == LieType::D) {
    if (k < 1) return false;
    if (k >= 2 && std::abs(w[1]) >= w[2]) return false;
    for (int i = 2; i < k; ++i)
      if (w[i] >= w[i + 1]) return false;
    return true;
  }
  if (k < 0) return false;
  if (k >= 1 && w[1] <= 0) return false;
  for (int i = 1; i < k; ++i)
    if (w[i] >= w[i + 1]) return false;
  return true;
}

bool is_partition(const std::vector<int>& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return v.empty() || v.back() >= 0;
}

std::vector<int> sorted_parts(const std::vector<int>& v) {
  std::vector<int> r;
  for (int x : v)
    if (x > 0) r.push_back(x);
  std::sort(r.rbegin(), r.rend());
  return r;
}

std::vector<int> conjugate(const std::vector<int>& lambda) {
  std::vector<int> out;
  int top = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
  for (int j = 1; j <= top; ++j) {
    int c = 0;
    for (int x : lambda)
      if (x >= j) ++c;
    out.push_back(c);
  }
  return out;
}

int ShapeData::beta_at(int i) const {
  const int len = static_cast<int>(beta.size());
  if (i >= 1 && i <= len) return beta[i - 1];
  return n + (i - len);
}

ShapeData shape_at(const SignedWord& w, int k) {
  validate(w);
  ShapeData s;
  s.type = w.type;
  s.n = w.n();
  s.k = k;
  const int n = w.n();

  if (w.type == LieType::A) {
    s.gamma = a_code(w);
    s.lambda = sorted_parts(s.gamma);
    s.nu = s.lambda;
    s.ell = static_cast<int>(s.lambda.size());
    for (int j = 1; j <= s.ell; ++j) {
      int f = 0;
      for (int i = 1; i <= n; ++i)
        if (s.gamma[i - 1] >= s.lambda[j - 1]) f = i;
      s.f_flag.push_back(f);
    }
    for (int j = 1; j <= s.ell; ++j) {
      int c = j;
      while (c < s.ell && s.lambda_at(c) <= s.lambda_at(c + 1)) ++c;
      s.critical.insert(c);
      s.g_flag.push_back(s.f_flag[c - 1] + s.lambda[c - 1] - c);
    }
    return s;
  }

  if (!increasing_up_to(w, k)) throw std::invalid_argument("word " + w.pretty() + " is not increasing up to " + std::to_string(k));

  const bool type_d = w.type == LieType::D;
  SignedWord src = w;
  if (type_d) {
    s.d_type = d_type(w);
    if (s.d_type == 2) src = iota(w);
  }
  s.gamma = a_code(src);
  for (int v : src.w) {
    if (v >= 0) continue;
    int part = type_d ? -v - 1 : -v;
    if (part > 0) s.mu.push_back(part);
  }
  std::sort(s.mu.rbegin(), s.mu.rend());
  s.m = static_cast<int>(s.mu.size());
  s.nu = conjugate(sorted_parts(s.gamma));
  {
    size_t len = std::max(s.mu.size(), s.nu.size());
    s.lambda.assign(len, 0);
    for (size_t i = 0; i < len; ++i)
      s.lambda[i] = (i < s.mu.size() ? s.mu[i] : 0) + (i < s.nu.size() ? s.nu[i] : 0);
  }
  s.ell = static_cast<int>(s.lambda.size());

  s.trunc_code.assign(s.gamma.begin() + k, s.gamma.end());
  s.xi = conjugate(sorted_parts(s.trunc_code));
  std::vector<int> psi;
  for (int i = k; i >= 1; --i) psi.push_back(s.gamma[i - 1]);
  s.phi = conjugate(sorted_parts(psi));

  std::vector<int> u(w.w.begin() + k, w.w.end());
  std::sort(u.begin(), u.end());
  for (int x : u) s.beta.push_back(x < 0 ? x + 1 : x);
  for (int i = 1; i <= n - k; ++i)
    for (int j = i + 1; j <= n - k; ++j)
      if (s.beta[i - 1] + s.beta[j - 1] <= 0) s.denom_set.emplace_back(i, j);

  for (int c = 1; c <= s.ell; ++c) {
    bool crit = s.beta_at(c + 1) > s.beta_at(c) + 1;
    if (type_d && s.beta_at(c) == 1 && s.beta_at(c + 1) == 2) crit = true;
    int lc = s.lambda_at(c), ln = s.lambda_at(c + 1);
    bool low = type_d ? c <= s.m : c < s.m;
    if (low && lc > ln + 1) crit = true;
    if (c > s.m && lc > ln) crit = true;
    if (crit) s.critical.insert(c);
  }
  for (int j = 1; j <= s.ell; ++j) {
    int mx = 0;
    for (int i = 1; i <= n - k; ++i)
      if (s.trunc_code[i - 1] >= j) mx = i;
    s.f_flag.push_back(k + mx);
  }
  for (int j = 1; j <= s.ell; ++j) {
    auto it = s.critical.lower_bound(j);
    if (it == s.critical.end()) throw std::logic_error("no critical index at or after " + std::to_string(j) + " for " + w.pretty());
    int c = *it;
    s.g_flag.push_back(s.f_flag[c - 1] + s.beta_at(c) - s.xi_at(c) - k);
  }
  return s;
}

ShapeData shape(const SignedWord& w) {
  validate(w);
  if (w.type == LieType::A) return shape_at(w, first_descent(w));
  if (w.is_identity()) {
    ShapeData s = shape_at(w, w.type == LieType::D ? 1 : 0);
    return s;
  }
  return shape_at(w, first_descent(w));
}

SignedWord grassmannianize(const SignedWord& w, int k) {
  if (!increasing_up_to(w, k)) throw std::invalid_argument("word " + w.pretty() + " is not increasing up to " + std::to_string(k));
  SignedWord v = w;
  std::sort(v.w.begin() + k, v.w.end());
  return v;
}

bool avoids_pattern(const std::vector<int>& perm, const std::vector<int>& pattern) {
  const int n = static_cast<int>(perm.size()), p = static_cast<int>(pattern.size());
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int start) -> bool {
    if (static_cast<int>(pick.size()) == p) {
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
          if ((perm[pick[a]] < perm[pick[b]]) != (pattern[a] < pattern[b])) return false;
      return true;
    }
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      bool hit = rec(i + 1);
      pick.pop_back();
      if (hit) return true;
    }
    return false;
  };
  return !rec(0);
}

bool is_vexillary(const SignedWord& w) { return avoids_pattern(w.w, {2, 1, 4, 3}); }

bool is_dominant(const SignedWord& w) { return is_partition(a_code(w)); }

bool is_leading(const SignedWord& w) {
  if (w.type == LieType::A) return is_dominant(w);
  if (w.type == LieType::D && !is_proper(w)) return false;
  int k = w.is_identity() ? (w.type == LieType::D ? 1 : 0) : first_descent(w);
  SignedWord src = (w.type == LieType::D && d_type(w) == 2) ? iota(w) : w;
  std::vector<int> g = a_code(src);
  return is_partition(std::vector<int>(g.begin() + k, g.end()));
}

Classification classify(const SignedWord& w) {
  validate(w);
  Classification c;
  c.dominant = is_dominant(w);
  c.vexillary = w.type == LieType::A ? is_vexillary(w) : false;
  std::set<int> d = descents(w, DescentSide::Right);
  if (d.empty()) {
    c.grassmannian = w.type == LieType::D ? 1 : 0;
  } else if (d.size() == 1) {
    int i = *d.begin();
    c.grassmannian = i == kSBox ? 1 : i;
  } else if (w.type == LieType::D && d.size() == 2 && d.count(kSBox) && d.count(1)) {
    c.grassmannian = 1;
  }
  c.proper = is_proper(w);
  c.leading = is_leading(w);
  if (w.type == LieType::D) {
    int k = w.is_identity() ? 1 : first_descent(w);
    c.valid = increasing_up_to(w, k);
  } else {
    c.valid = true;
  }
  return c;
}

namespace {

std::vector<int> mask_letters(const std::vector<int>& letters, unsigned mask) {
  std::vector<int> out;
  for (size_t i = 0; i < letters.size(); ++i)
    if (mask >> i & 1u) out.push_back(letters[i]);
  return out;
}

std::optional<Modification> decompose_a(const SignedWord& w, bool first_only) {
  const int n = w.n();
  std::map<std::vector<int>, Modification> found;
  if (n <= 1) {
    Modification m{identity(LieType::A, n), {}, {}, w, 0};
    return m;
  }
  std::vector<int> L;
  for (int i = n - 1; i >= 1; --i) L.push_back(i);
  // Blocks are applied R_{n-1} first, so masks grow as p decreases.
  // Each block enters reversed, through right multiplication.
  std::function<void(const SignedWord&, unsigned, std::vector<unsigned>&)> rec;
  bool stop = false;
  rec = [&](const SignedWord& cur, unsigned prev, std::vector<unsigned>& masks) {
    if (stop) return;
    if (static_cast<int>(masks.size()) == n - 1) {
      if (!is_dominant(cur)) return;
      // masks[0] is R_{n-1}, masks.back() is R_1
      Modification m;
      m.base = cur;
      m.R.resize(n - 1);
      for (int p = 1; p <= n - 1; ++p) {
        m.R[p - 1] = mask_letters(L, masks[n - 1 - p]);
        m.reduced_word.insert(m.reduced_word.end(), m.R[p - 1].begin(), m.R[p - 1].end());
      }
      m.omega = from_word(LieType::A, n, m.reduced_word);
      if (!found.count(m.omega.w)) found.emplace(m.omega.w, m);
      if (first_only) stop = true;
      return;
    }
    const unsigned full = (1u << L.size()) - 1u;
    const unsigned free = full & ~prev;
    for (unsigned sub = free;; sub = (sub - 1) & free) {
      unsigned mask = prev | sub;
      SignedWord v = cur;
      int lv = length(v);
      bool ok = true;
      for (int i = static_cast<int>(L.size()) - 1; i >= 0 && ok; --i) {
        if (!(mask >> i & 1u)) continue;
        SignedWord nx = right_mult(v, L[i]);
        int ln = length(nx);
        if (ln != lv + 1) ok = false;
        v = nx;
        lv = ln;
      }
      if (ok) {
        masks.push_back(mask);
        rec(v, mask, masks);
        masks.pop_back();
        if (stop) return;
      }
      if (sub == 0) break;
    }
  };
  std::vector<unsigned> masks;
  rec(w, 0u, masks);
  if (found.empty()) return std::nullopt;
  return found.begin()->second;
}

std::optional<Modification> decompose_bcd(const SignedWord& w, bool first_only) {
  const int n = w.n();
  const bool type_d = w.type == LieType::D;
  std::map<std::vector<int>, Modification> found;
  const int kmin = type_d ? 1 : 0;
  for (int k = kmin; k <= n; ++k) {
    if (!increasing_up_to(w, k)) break;
    std::set<int> neg, pos;
    for (int i = k + 1; i <= n; ++i) {
      int v = w[i];
      if (v < 0) {
        if (!type_d || v <= -2) neg.insert(-v);
      } else {
        pos.insert(v);
      }
    }
    const int lo = type_d ? 2 : 1;
    std::vector<int> letters;
    for (int i = n - 1; i >= lo; --i)
      if (neg.count(i) && neg.count(i + 1)) letters.push_back(i);
    for (int i = lo; i <= n - 1; ++i)
      if (pos.count(i) && pos.count(i + 1)) letters.push_back(i);

    const int blocks = std::max(n - 1, 0);
    std::function<void(const SignedWord&, unsigned, std::vector<unsigned>&)> rec;
    bool stop = false;
    rec = [&](const SignedWord& cur, unsigned prev, std::vector<unsigned>& masks) {
      if (stop) return;
      if (static_cast<int>(masks.size()) == blocks) {
        int kb = cur.is_identity() ? kmin : first_descent(cur);
        if (kb != k || !is_leading(cur)) return;
        Modification m;
        m.base = cur;
        m.k = k;
        m.R.resize(blocks);
        for (int p = 1; p <= blocks; ++p) {
          m.R[p - 1] = mask_letters(letters, masks[p - 1]);
          m.reduced_word.insert(m.reduced_word.end(), m.R[p - 1].begin(), m.R[p - 1].end());
        }
        m.omega = from_word(LieType::A, n, m.reduced_word);
        m.omega.type = LieType::A;
        if (!found.count(m.omega.w)) found.emplace(m.omega.w, m);
        if (first_only) stop = true;
        return;
      }
      const unsigned full = letters.empty() ? 0u : (1u << letters.size()) - 1u;
      const unsigned free = full & ~prev;
      for (unsigned sub = free;; sub = (sub - 1) & free) {
        unsigned mask = prev | sub;
        SignedWord v = cur;
        int lv = length(v);
        bool ok = true;
        for (size_t i = 0; i < letters.size() && ok; ++i) {
          if (!(mask >> i & 1u)) continue;
          SignedWord nx = left_mult(letters[i], v);
          int ln = length(nx);
          if (ln != lv + 1) ok = false;
          v = nx;
          lv = ln;
        }
        if (ok) {
          masks.push_back(mask);
          rec(v, mask, masks);
          masks.pop_back();
          if (stop) return;
        }
        if (sub == 0) break;
      }
    };
    std::vector<unsigned> masks;
    if (blocks == 0) {
      int kb = w.is_identity() ? kmin : first_descent(w);
      if (kb == k && is_leading(w)) found.emplace(identity(LieType::A, n).w, Modification{identity(LieType::A, n), {}, {}, w, k});
    } else {
      rec(w, 0u, masks);
    }
    if (first_only && !found.empty()) break;
  }
  if (found.empty()) return std::nullopt;
  return found.begin()->second;
}

}  // namespace

std::optional<Modification> amenable_decompose(const SignedWord& w) {
  validate(w);
  return w.type == LieType::A ? decompose_a(w, false) : decompose_bcd(w, false);
}

bool is_amenable(const SignedWord& w) {
  validate(w);
  return (w.type == LieType::A ? decompose_a(w, true) : decompose_bcd(w, true)).has_value();
}

std::vector<SignedWord> all_elements(LieType t, int n) {
  std::vector<SignedWord> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (t == LieType::A) {
      out.emplace_back(t, perm);
      continue;
    }
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      if (t == LieType::D && __builtin_popcount(signs) % 2) continue;
      std::vector<int> e = perm;
      for (int i = 0; i < n; ++i)
        if (signs >> i & 1u) e[i] = -e[i];
      out.emplace_back(t, e);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> zeta_embed(const SignedWord& w, ZetaFlavor flavor) {
  if (w.type == LieType::A) throw std::invalid_argument("zeta_embed expects a signed permutation of type B, C or D");
  SignedWord src = w;
  const int n = w.n();
  if (flavor == ZetaFlavor::D) {
    SignedWord w0 = longest_element(LieType::D, n);
    src = compose(compose(w0, w), w0);
  }
  const bool odd = flavor == ZetaFlavor::B;
  const int N = odd ? 2 * n + 1 : 2 * n;
  std::vector<int> z(N, 0);
  for (int i = 1; i <= n; ++i) {
    int v = src[n + 1 - i];
    z[i - 1] = v > 0 ? n + 1 - v : (odd ? n + 1 - v : n - v);
    z[N - i] = N + 1 - z[i - 1];
  }
  if (odd) z[n] = n + 1;
  return z;
}

std::string word_to_string(const std::vector<int>& reflections) {
  if (reflections.empty()) return "1";
  std::ostringstream os;
  for (int i : reflections) {
    if (i == kSBox) os << "s[]";
    else os << "s" << i;
  }
  return os.str();
}

}  // namespace amen
