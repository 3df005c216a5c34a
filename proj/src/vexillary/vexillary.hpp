#pragma once

#include <map>
#include <vector>

#include "weyl_core/weyl.hpp"

namespace amen {

// Code conditions (i) and (ii) for vexillary permutations.
bool vexillary_test(const std::vector<int>& gamma);

struct IntervalData {
  std::vector<int> initial_indices;  // sorted, 1-based
  std::map<int, int> associated;     // i -> j
  std::vector<int> weights;          // weights[k-1] for k = 1..n
  std::map<int, int> depths;         // keyed by left endpoint i of [i, j)
};

IntervalData interval_data(const std::vector<int>& gamma);

struct Move {
  int i = 0, j = 0;
  std::vector<int> before, after;
};

struct CanonicalOmega {
  std::vector<int> word;                // reflection indices
  std::vector<std::vector<int>> R;      // R_1..R_{n-1}, subwords of s_1...s_{n-1}
  SignedWord omega;
  SignedWord product;                   // varpi * omega, dominant
  std::vector<Move> inverse_moves;      // replay of the code through the word
};

// Throws std::invalid_argument when varpi is not vexillary.
CanonicalOmega canonical_omega(const SignedWord& varpi);

struct TableauT {
  std::vector<int> gamma_hat;
  std::vector<int> lambda, lambda_hat;
  std::vector<std::vector<int>> rows;   // row i lists entries left to right
  std::vector<int> omega_word;
};

TableauT tableau_T(const SignedWord& varpi);

// Forward procedure: right action of the word on the code of base, grouped
// into maximal runs s_{j-1}...s_i.
std::vector<Move> procedure_moves(const SignedWord& base, const std::vector<int>& word);
// Checks the post-move inequality against the final code at every step.
bool moves_satisfy_min_property(const std::vector<Move>& moves, const std::vector<int>& final_code);

}  // namespace amen
