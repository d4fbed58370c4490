#pragma once

// Exhaustive reference enumerators and a differential check of the
// production enumerators against them on random small scenarios.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "rae/framework.hpp"
#include "rae/scenario.hpp"
#include "rae/semantics.hpp"

namespace rae {

inline constexpr std::size_t kOracleMaxArguments = 16;

/// Checks every subset with the framework predicates and keeps the
/// ⊆-maximal admissible ones (or every stable one). Throws CapacityError
/// above kOracleMaxArguments.
ExtensionSet brute_force_extensions(const Baf& f, Semantics sem);
ExtensionSet brute_force_preferred_aaf(const Aaf& f);

using BafEnumerator = std::function<ExtensionSet(const Baf&, Semantics)>;
using AafEnumerator = std::function<ExtensionSet(const Aaf&)>;

struct OracleCheckConfig {
  std::size_t scenarios = 200;
  std::size_t max_models = 6;
  std::uint64_t seed = 0;
  double invalidity_rate = 0.3;
  double tie_rate = 0.3;
  std::size_t label_count = 2;
};

struct OracleMismatch {
  Scenario scenario;
  /// Semantics name, "aaf-preferred", or the name of the failed equivalence.
  std::string semantics;
  std::vector<std::vector<std::string>> expected;
  std::vector<std::vector<std::string>> actual;
};

struct OracleCheckResult {
  std::size_t scenarios_checked = 0;
  std::size_t comparisons = 0;
  std::optional<OracleMismatch> mismatch;
};

/// Generates scenarios with 1..max_models models and compares every BAF
/// semantics and AAF preferred semantics against the brute-force oracle.
/// Also checks that stable equals d-preferred, c-preferred equals
/// s-preferred and the AAF family maps onto s-preferred. Stops at the first
/// disagreement. Throws CapacityError when
/// 2 * max_models exceeds kOracleMaxArguments.
OracleCheckResult run_oracle_check(const OracleCheckConfig& cfg, const BafEnumerator& baf_enum = {},
                                   const AafEnumerator& aaf_enum = {});

}  // namespace rae
