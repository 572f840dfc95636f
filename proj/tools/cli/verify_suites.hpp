#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tripow::cli {

struct SuiteResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  /// Full parameter set of the first failing case.
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return failed == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::int64_t trials = 1000;
  /// Test hook: expect classify(tilde(f)) == classify(f), which is wrong.
  bool negate_duality = false;
};

/// Randomized cross-checks of the closed forms against the oracle, in a
/// fixed order, each suite drawing from its own SplitMix64 stream derived
/// from the seed.
std::vector<SuiteResult> run_verify_suites(const VerifyOptions& opts);

}  // namespace tripow::cli
