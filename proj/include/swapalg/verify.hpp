#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace swapalg {

// One failed check: a re-runnable input description plus the two sides that
// were supposed to agree.
struct Failure {
  std::string input;
  std::string expected;
  std::string got;
  bool operator==(const Failure&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::map<std::string, std::string> params;  // canonicalized, defaults filled
  std::uint64_t seed = 0;
  int trials = 0;  // number of individual checks performed
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  // Pinned key order: suite, params, seed, trials, failures, elapsed_ms.
  std::string to_json() const;
  static SuiteReport from_json(const std::string& text);
  // Equality up to elapsed_ms.
  bool same_outcome(const SuiteReport& other) const;
};

const std::vector<std::string>& suite_names();

// Runs one named property suite. Deterministic: identical (name, params,
// seed) give identical reports apart from elapsed_ms. Trials may run across
// threads (capped by SWAPALG_THREADS); results merge in input order.
SuiteReport run_suite(const std::string& name, const std::map<std::string, std::string>& params,
                      std::uint64_t seed);

}  // namespace swapalg
