#include "flagged_formulas/raising.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace amen {

bool is_valid_pair_set(const PairSet& d) {
  for (auto [i, j] : d) {
    if (i < 1 || j <= i) return false;
    if (i > 1 && !d.count({i - 1, j})) return false;
    if (j > i + 1 && !d.count({i, j - 1})) return false;
  }
  return true;
}

PairSet all_pairs(int ell) {
  PairSet d;
  for (int i = 1; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j) d.insert({i, j});
  return d;
}

std::set<int> RaisingTerm::support(int d) const {
  std::set<int> s;
  for (const auto& e : exps)
    if (e[1] <= d) s.insert(e[0]), s.insert(e[1]);
  return s;
}

bool RaisingTerm::touches(int row) const {
  for (const auto& e : exps)
    if (e[0] == row || e[1] == row) return true;
  return false;
}

std::string RaisingTerm::str() const {
  if (exps.empty()) return "1";
  std::ostringstream os;
  for (size_t t = 0; t < exps.size(); ++t) {
    if (t) os << ' ';
    os << 'R' << exps[t][0] << exps[t][1];
    if (exps[t][2] > 1) os << '^' << exps[t][2];
  }
  return os.str();
}

std::vector<RaisingTerm> expand_RD(const PairSet& d, int ell, const std::vector<int>& alpha) {
  std::vector<int> a(ell, 0);
  for (int i = 0; i < ell && i < static_cast<int>(alpha.size()); ++i) a[i] = alpha[i];
  std::vector<RaisingTerm> out;
  // raise[i] collects sum_k n_{ik} for the columns already fixed.
  std::vector<int> raise(ell + 1, 0), lower(ell + 1, 0);
  std::vector<std::array<int, 3>> exps;

  // Columns are fixed from j = ell down to 2; inside a column the rows
  // i = j-1 down to 1 receive their exponents.
  std::function<void(int, int, int64_t)> rec = [&](int j, int i, int64_t coeff) {
    if (j < 2) {
      RaisingTerm t;
      t.coeff = coeff;
      t.index.resize(ell);
      for (int r = 1; r <= ell; ++r) t.index[r - 1] = a[r - 1] + raise[r] - lower[r];
      for (int v : t.index)
        if (v < 0) return;
      t.exps = exps;
      std::sort(t.exps.begin(), t.exps.end());
      out.push_back(std::move(t));
      return;
    }
    if (i < 1) {
      rec(j - 1, j - 2, coeff);
      return;
    }
    // row j is complete in its raises once columns > j are fixed
    const int budget = a[j - 1] + raise[j] - lower[j];
    const bool in_d = d.count({i, j}) > 0;
    const int cap = in_d ? budget : std::min(budget, 1);
    for (int n = 0; n <= cap; ++n) {
      int64_t c = coeff;
      if (n > 0) {
        if (in_d) c *= (n % 2 ? -2 : 2);
        else c = -c;
        exps.push_back({i, j, n});
      }
      raise[i] += n;
      lower[j] += n;
      rec(j, i - 1, c);
      raise[i] -= n;
      lower[j] -= n;
      if (n > 0) exps.pop_back();
    }
  };
  if (ell <= 1) {
    RaisingTerm t;
    t.index = a;
    bool ok = true;
    for (int v : a) ok = ok && v >= 0;
    if (ok) out.push_back(t);
    return out;
  }
  rec(ell, ell - 1, 1);
  std::sort(out.begin(), out.end(), [](const RaisingTerm& x, const RaisingTerm& y) { return x.exps < y.exps; });
  return out;
}

std::map<std::vector<int>, int64_t> collect_by_index(const std::vector<RaisingTerm>& terms) {
  std::map<std::vector<int>, int64_t> m;
  for (const auto& t : terms) m[t.index] += t.coeff;
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0) it = m.erase(it);
    else ++it;
  }
  return m;
}

std::string raising_label(const PairSet& d, int ell) {
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= ell; ++i)
    for (int j = i + 1; j <= ell; ++j) {
      any = true;
      if (d.count({i, j})) os << "(1-R" << i << j << ")/(1+R" << i << j << ")";
      else os << "(1-R" << i << j << ")";
    }
  return any ? os.str() : "1";
}

}  // namespace amen
