#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dnafsm::props {

inline constexpr std::uint64_t test_seed = 20240917;

/// Outcome of one property suite: how many cases ran and the first few
/// counterexamples.
struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

SuiteResult complement_involution(std::uint64_t seed = test_seed);
SuiteResult palindrome_counts();
SuiteResult distinguished_iff_edgeless(std::uint64_t seed = test_seed);
SuiteResult mis_matches_oracle(std::uint64_t seed = test_seed);
SuiteResult simulator_matches_fsm(std::uint64_t seed = test_seed);

std::vector<SuiteResult> all_suites(std::uint64_t seed = test_seed);

}  // namespace dnafsm::props
