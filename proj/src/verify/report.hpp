#pragma once

// Oracle-versus-formula sweeps, the counterexample reproductions and the
// JSON reports they produce.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "flagged_formulas/formulas.hpp"
#include "verify/lemmas.hpp"
#include "weyl_core/weyl.hpp"

namespace amen {

inline constexpr const char* kReportSchema = "amenable-report/1";

struct CaseRecord {
  std::string label;  // element, or the name of the checked statement
  std::optional<LieType> type;
  std::string form;
  bool equal = false;
  bool expected = true;  // the counterexamples expect inequality
  std::string mode;      // "exact" or "randomized"
  int trials = 0;
  uint64_t seed = 0, prime = 0;
  double elapsed_ms = 0;
  std::optional<bool> exact_recheck;  // exact verdict after a randomized failure
  std::string lhs, rhs;               // rendered on failure
  std::string note;
  bool passed() const { return equal == expected; }
};

struct Report {
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CaseRecord> cases;
  int amenable = 0;  // elements in scope before sampling
  int excluded = 0;  // explicit words dropped as not amenable
  int failed() const;
  bool ok() const { return failed() == 0 && !cases.empty(); }
  nlohmann::json to_json() const;
};

struct SweepConfig {
  LieType type = LieType::A;
  int n = 3;
  uint64_t seed = 1;
  uint64_t prime = 0;  // 0 picks the default
  bool exact = false;
  int sample = 0;      // 0 keeps every amenable element
  std::vector<SignedWord> words;  // explicit scope when nonempty
  bool all_forms = false;  // also the proposition and factorial forms
};

// Budget: exact mode up to S_6 / W_4, randomized up to S_7 / W_5.
// Throws std::invalid_argument when n is out of budget.
Report sweep(const SweepConfig& cfg);
std::vector<SignedWord> amenable_elements(LieType t, int n);

Report lemma_report(const LemmaConfig& cfg, const std::vector<std::string>& names = {});

// The deformation counterexample and the two inequalities for 321.
Report appendix_b();

// Truncated rendering for failure diagnostics.
std::string clip(const std::string& s, size_t limit = 20000);

}  // namespace amen
