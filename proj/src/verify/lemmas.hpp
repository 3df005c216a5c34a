#pragma once

// Randomized and exhaustive checks of the operator identities the
// formulas rest on: divided differences of the building blocks, the
// relations of the coefficient rings, and the alternation properties of
// raising operator expressions.

#include <cstdint>
#include <string>
#include <vector>

namespace amen {

struct LemmaConfig {
  uint64_t seed = 1;
  int trials = 100;    // random instances per randomized identity
  uint64_t prime = 0;  // field for point evaluations; 0 picks the default
};

struct LemmaOutcome {
  std::string name;
  std::string mode;  // "exact", "exhaustive exact" or "randomized"
  int instances = 0;
  int passed = 0;
  int points = 0;  // evaluation points used by randomized checks
  std::vector<std::string> failures;  // first few failing instances
  bool ok() const { return instances > 0 && passed == instances; }
};

std::vector<std::string> lemma_names();
// Throws std::invalid_argument for an unknown name.
LemmaOutcome run_lemma(const std::string& name, const LemmaConfig& cfg);
std::vector<LemmaOutcome> lemma_suite(const LemmaConfig& cfg);

}  // namespace amen
