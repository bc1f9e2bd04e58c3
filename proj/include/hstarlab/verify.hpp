#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hstarlab {

/// Scale caps for the identity sweeps. Unset caps fall back to per-suite
/// defaults (listed in suite_names()).
struct SweepBounds {
  std::optional<int> max_n;
  std::optional<int> max_k;
  std::optional<int> max_r;
  std::uint64_t seed = 1;
};

/// One checked identity within a suite.
struct IdentityReport {
  std::string suite;
  std::string identity;
  bool passed = true;
  std::uint64_t cases = 0;
  /// First failing parameter set, empty on success.
  std::string counterexample;
};

/// lemma1, prop1, prop2, prop3, prop4, prop5, eq6, eulerian.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for unknown names.
std::vector<IdentityReport> run_suite(std::string_view name, const SweepBounds& bounds);

}  // namespace hstarlab
