#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace amen {

enum class LieType { A, B, C, D };

char type_char(LieType t);
LieType parse_type(const std::string& s);

// Reflection indices: i >= 1 is s_i, 0 is s_0, -1 is s_box.
constexpr int kSBox = -1;

struct SignedWord {
  LieType type = LieType::A;
  std::vector<int> w;

  SignedWord() = default;
  SignedWord(LieType t, std::vector<int> entries);

  int n() const { return static_cast<int>(w.size()); }
  int operator[](int i) const { return w[i - 1]; }  // 1-based
  bool is_identity() const;
  std::string str() const;      // "-5,3,-4,7"
  std::string pretty() const;   // "(-5,3,-4)"
  friend bool operator==(const SignedWord& a, const SignedWord& b) { return a.type == b.type && a.w == b.w; }
  friend bool operator<(const SignedWord& a, const SignedWord& b) { return a.w < b.w; }
};

// Throws std::invalid_argument for malformed words.
void validate(const SignedWord& w);
SignedWord parse_word(LieType t, const std::string& csv);

SignedWord identity(LieType t, int n);
SignedWord longest_element(LieType t, int n);
SignedWord pad(const SignedWord& w, int n);

int length(const SignedWord& w);
int num_negative(const SignedWord& w);

// w s_i (acts on positions) and s_i w (acts on values).
SignedWord right_mult(const SignedWord& w, int i);
SignedWord left_mult(int i, const SignedWord& w);
// (u v)(i) = u(v(i))
SignedWord compose(const SignedWord& u, const SignedWord& v);
SignedWord inverse(const SignedWord& w);
SignedWord from_word(LieType t, int n, const std::vector<int>& reflections);

std::vector<int> simple_reflections(LieType t, int n);
enum class DescentSide { Left, Right };
std::set<int> descents(const SignedWord& w, DescentSide side);
// Left s_box descent by the three listed patterns on values +-1, +-2.
bool box_left_descent_by_pattern(const SignedWord& w);

std::vector<int> a_code(const SignedWord& w);
SignedWord iota(const SignedWord& w);
int d_type(const SignedWord& w);
bool is_proper(const SignedWord& w);

// First right descent (A/B/C; 0 when w_1 < 0) or primary index (D).
// The identity gets 0 in A/B/C and 1 in D.
int first_descent(const SignedWord& w);
bool increasing_up_to(const SignedWord& w, int k);

struct ShapeData {
  LieType type = LieType::A;
  std::vector<int> gamma;  // A-code (of iota(w) for type 2)
  std::vector<int> mu, nu, lambda;
  int d_type = 0;
  int k = 0;
  std::vector<int> trunc_code, xi, beta, phi;
  std::vector<std::pair<int, int>> denom_set;
  std::set<int> critical;
  std::vector<int> f_flag, g_flag;
  int m = 0, ell = 0;

  // beta padded beyond n-k by beta_{n-k+j} = n + j
  int beta_at(int i) const;
  int lambda_at(int i) const { return i >= 1 && i <= static_cast<int>(lambda.size()) ? lambda[i - 1] : 0; }
  int xi_at(int i) const { return i >= 1 && i <= static_cast<int>(xi.size()) ? xi[i - 1] : 0; }
  int n = 0;
};

ShapeData shape(const SignedWord& w);
// Shape data relative to a chosen k (w increasing up to k).
ShapeData shape_at(const SignedWord& w, int k);

SignedWord grassmannianize(const SignedWord& w, int k);

bool is_partition(const std::vector<int>& v);
std::vector<int> conjugate(const std::vector<int>& lambda);
std::vector<int> sorted_parts(const std::vector<int>& v);  // nonzero, decreasing

bool avoids_pattern(const std::vector<int>& perm, const std::vector<int>& pattern);
bool is_vexillary(const SignedWord& w);  // type A: 2143-avoiding
bool is_dominant(const SignedWord& w);   // A-code is a partition

struct Classification {
  bool dominant = false;
  bool vexillary = false;
  std::optional<int> grassmannian;
  bool leading = false;
  bool proper = true;
  bool valid = false;
};
Classification classify(const SignedWord& w);
bool is_leading(const SignedWord& w);

struct Modification {
  SignedWord omega;                  // permutation in S_n
  std::vector<std::vector<int>> R;   // canonical blocks R_1..R_{n-1}
  std::vector<int> reduced_word;     // concatenation of the blocks
  SignedWord base;                   // dominant (A) or leading (B/C/D) element
  int k = 0;
};

// Type A: w = base * omega. Types B/C/D: w = omega * base.
std::optional<Modification> amenable_decompose(const SignedWord& w);
bool is_amenable(const SignedWord& w);

// All elements of W_n (or S_n, or the even subgroup), lex order.
std::vector<SignedWord> all_elements(LieType t, int n);

enum class ZetaFlavor { C, B, D };
// Image permutation (1-based values) under the classical embeddings.
std::vector<int> zeta_embed(const SignedWord& w, ZetaFlavor flavor);

std::string word_to_string(const std::vector<int>& reflections);  // "s4s3s2"

}  // namespace amen
