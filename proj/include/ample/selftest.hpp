#pragma once

// Randomized and exhaustive consistency suites, one per library area. Each
// suite is deterministic for a given seed.

#include <cstdint>
#include <string>
#include <vector>

namespace ample {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  /// First failing check, or a short summary when everything passed.
  std::string detail;
};

/// group-laws, index, gen-perm, torsion, towers, parity-exchange,
/// property-e, kernel, measure, finite-oracle, nowhere-dense, stabilizers.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 1);

}  // namespace ample
