#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace amen {

using PairSet = std::set<std::pair<int, int>>;

// Order ideal for (i',j') <= (i,j) iff i' <= i and j' <= j.
bool is_valid_pair_set(const PairSet& d);
// All pairs i < j <= ell; stands in for the infinite product.
PairSet all_pairs(int ell);

struct RaisingTerm {
  std::vector<std::array<int, 3>> exps;  // (i, j, n_ij) with n_ij > 0, lex sorted
  int64_t coeff = 1;
  std::vector<int> index;                // R applied to the input vector

  // indices i and j with n_ij > 0 and j <= d
  std::set<int> support(int d) const;
  bool touches(int row) const;
  std::string str() const;  // "R12^2 R23"
};

// Terms of R^D acting on alpha (rows 1..ell) whose image has no negative
// entry. Pairs outside D contribute (1 - R_ij), pairs in D contribute
// (1 - R_ij)/(1 + R_ij) = 1 + 2 sum_{k>=1} (-R_ij)^k.
std::vector<RaisingTerm> expand_RD(const PairSet& d, int ell, const std::vector<int>& alpha);

// Sum of coefficients per resulting index vector.
std::map<std::vector<int>, int64_t> collect_by_index(const std::vector<RaisingTerm>& terms);

// "(1-R12)/(1+R12)(1-R13)(1-R23)"
std::string raising_label(const PairSet& d, int ell);

}  // namespace amen
