#include "vexillary/vexillary.hpp"

#include <algorithm>
#include <stdexcept>

namespace amen {

bool vexillary_test(const std::vector<int>& g) {
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g[i] <= g[j]) {
        for (int k = i + 1; k < j; ++k)
          if (g[i] > g[k]) return false;
      } else {
        int cnt = 0;
        for (int k = i + 1; k < j; ++k)
          if (g[k] < g[j]) ++cnt;
        if (cnt > g[i] - g[j]) return false;
      }
    }
  return true;
}

IntervalData interval_data(const std::vector<int>& g) {
  const int n = static_cast<int>(g.size());
  IntervalData d;
  for (int i = 1; i <= n; ++i) {
    int j = 0;
    for (int s = i + 1; s <= n; ++s)
      if (g[i - 1] < g[s - 1]) j = s;
    if (j) {
      d.initial_indices.push_back(i);
      d.associated[i] = j;
    }
  }
  d.weights.assign(n, 0);
  for (auto [i, j] : d.associated)
    for (int k = i; k <= j; ++k) ++d.weights[k - 1];
  for (auto [i, j] : d.associated) {
    int depth = n + 1;
    for (int k = i; k < j; ++k) depth = std::min(depth, d.weights[k - 1]);
    d.depths[i] = depth;
  }
  return d;
}

namespace {

std::vector<Move> group_runs(const SignedWord& start, const std::vector<int>& word, int dir) {
  std::vector<Move> out;
  SignedWord cur = start;
  size_t p = 0;
  while (p < word.size()) {
    size_t q = p + 1;
    while (q < word.size() && word[q] == word[q - 1] + dir) ++q;
    Move m;
    m.before = a_code(cur);
    for (size_t r = p; r < q; ++r) cur = right_mult(cur, word[r]);
    m.after = a_code(cur);
    int lo = std::min(word[p], word[q - 1]);
    int hi = std::max(word[p], word[q - 1]);
    m.i = lo;
    m.j = hi + 1;
    out.push_back(std::move(m));
    p = q;
  }
  return out;
}

}  // namespace

CanonicalOmega canonical_omega(const SignedWord& varpi) {
  if (varpi.type != LieType::A) throw std::invalid_argument("canonical_omega expects a permutation");
  validate(varpi);
  const auto g = a_code(varpi);
  if (!vexillary_test(g)) throw std::invalid_argument("permutation " + varpi.pretty() + " is not vexillary");
  const int n = varpi.n();
  IntervalData d = interval_data(g);
  int top = 0;
  for (auto [i, dep] : d.depths) top = std::max(top, dep);
  CanonicalOmega out;
  std::vector<std::vector<int>> levels;
  for (int dep = top; dep >= 1; --dep) {
    std::vector<int> level;
    for (auto [i, j] : d.associated)
      if (d.depths[i] == dep)
        for (int k = i; k < j; ++k) level.push_back(k);
    std::sort(level.begin(), level.end());
    if (!level.empty()) levels.push_back(level);
    out.word.insert(out.word.end(), level.begin(), level.end());
  }
  const int blocks = std::max(n - 1, 0);
  out.R.assign(blocks, {});
  const int off = blocks - static_cast<int>(levels.size());
  for (size_t t = 0; t < levels.size(); ++t) out.R[off + t] = levels[t];
  out.omega = from_word(LieType::A, n, out.word);
  out.product = compose(varpi, out.omega);
  out.inverse_moves = group_runs(varpi, out.word, +1);
  return out;
}

TableauT tableau_T(const SignedWord& varpi) {
  validate(varpi);
  const auto g = a_code(varpi);
  if (!vexillary_test(g)) throw std::invalid_argument("permutation " + varpi.pretty() + " is not vexillary");
  IntervalData d = interval_data(g);
  TableauT t;
  const int n = varpi.n();
  t.gamma_hat = g;
  for (int a = 1; a <= n; ++a)
    for (auto [i, j] : d.associated)
      if (i < a && a <= j) ++t.gamma_hat[a - 1];
  t.lambda = sorted_parts(g);
  t.lambda_hat = sorted_parts(t.gamma_hat);
  int maxlen = 0;
  for (size_t r = 0; r < t.lambda_hat.size(); ++r) {
    int base = r < t.lambda.size() ? t.lambda[r] : 0;
    int len = t.lambda_hat[r] - base;
    if (len < 0) throw std::logic_error("skew shape is not contained in the outer shape");
    std::vector<int> row;
    for (int b = 0; b < len; ++b) row.push_back(static_cast<int>(r) + len - b);
    maxlen = std::max(maxlen, len);
    t.rows.push_back(row);
  }
  for (int depth = maxlen - 1; depth >= 0; --depth) {
    std::vector<int> level;
    for (const auto& row : t.rows) {
      int len = static_cast<int>(row.size());
      if (depth < len) level.push_back(row[len - 1 - depth]);
    }
    std::sort(level.begin(), level.end());
    t.omega_word.insert(t.omega_word.end(), level.begin(), level.end());
  }
  return t;
}

std::vector<Move> procedure_moves(const SignedWord& base, const std::vector<int>& word) {
  return group_runs(base, word, -1);
}

bool moves_satisfy_min_property(const std::vector<Move>& moves, const std::vector<int>& final_code) {
  for (const auto& m : moves) {
    const auto& a = m.after;
    const int n = static_cast<int>(a.size());
    if (a[m.i - 1] != final_code[m.i - 1]) return false;
    int mn = a[m.i - 1];
    for (int r = m.i; r <= m.j; ++r) mn = std::min(mn, a[r - 1]);
    if (mn != a[m.i - 1]) return false;
    for (int r = m.j + 1; r <= n; ++r)
      if (a[r - 1] > a[m.i - 1]) return false;
  }
  return true;
}

}  // namespace amen
