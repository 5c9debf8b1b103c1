#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace webperm {

// Limits on --max-n and --max-chords that only --unsafe-no-cap lifts.
inline constexpr int kHardMaxN = 9;
inline constexpr int kHardMaxChords = 8;

struct SuiteParams {
  int max_n = 8;
  int max_chords = 6;
  int threads = 1;
  bool unsafe_no_cap = false;
};

struct CheckResult {
  std::string id;
  bool passed = true;
  std::optional<std::string> witness;
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckResult> checks;  // sorted by id
  std::int64_t elapsed_ms = 0;

  bool passed() const;
  // {"suite", "params", "checks": [{"id", "status", "witness"}], "elapsed_ms"}
  std::string to_json(bool with_timing = true) const;
};

// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

// Unknown suites and out-of-range parameters raise PreconditionError; caps
// beyond the hard limits raise CapExceeded unless unsafe_no_cap is set.
void validate(const SuiteParams& params);
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace webperm
