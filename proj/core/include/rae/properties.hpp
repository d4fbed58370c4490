#pragma once

// The six desirable properties of an ensembling solution and batch-level
// aggregation of accuracy, simplicity, property satisfaction and timing.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rae/ensembling.hpp"
#include "rae/scenario.hpp"

namespace rae {

enum class PropertyId {
  kNonEmptiness,
  kNonTriviality,
  kModelAgreement,
  kMajorityVote,
  kCounterfactualValidity,
  kCounterfactualCoherence,
};

inline constexpr std::array<PropertyId, 6> kAllProperties = {
    PropertyId::kNonEmptiness,           PropertyId::kNonTriviality,
    PropertyId::kModelAgreement,         PropertyId::kMajorityVote,
    PropertyId::kCounterfactualValidity, PropertyId::kCounterfactualCoherence,
};

/// Snake-case names used as report keys and CSV columns.
const char* to_string(PropertyId p);

/// Whether `sol` (a solution for `s`) has property `p`. Majority vote needs
/// at least one selected model.
bool check_property(const Scenario& s, const Solution& sol, PropertyId p);

enum class MethodKind { kNaive, kAugmented, kRobust, kArgumentative };

struct MethodConfig {
  MethodKind kind = MethodKind::kNaive;
  Semantics semantics = Semantics::kSPreferred;
  /// Property priority for argumentative methods; the scenario's own
  /// preference is used when unset.
  std::optional<std::vector<std::vector<std::string>>> priority;

  std::string name() const;
};

/// Parses "naive", "augmented", "robust", "arg:<semantics>" or
/// "arg:<semantics>:<priority>" where priority is a comma list of groups and
/// '+' joins equally-ranked properties, e.g. "arg:s-preferred:accuracy+simplicity".
/// Throws ConfigError.
MethodConfig parse_method(std::string_view text);

/// Comma-separated property priority, '+' joining tied properties.
std::vector<std::vector<std::string>> parse_priority(std::string_view text);

Solution run_method(const Scenario& s, const MethodConfig& method, std::uint64_t seed,
                    const EnumerationOptions& opts = {});

struct MethodReport {
  std::string method;
  std::optional<double> accuracy;
  std::optional<double> mean_simplicity;
  std::array<double, 6> satisfaction{};  // indexed like kAllProperties
  /// Absent when timing is disabled.
  std::optional<double> mean_solve_seconds;
  std::size_t scenarios = 0;

  double rate(PropertyId p) const { return satisfaction[static_cast<std::size_t>(p)]; }
};

struct BatchReport {
  std::vector<MethodReport> methods;
};

struct BatchOptions {
  EnumerationOptions enumeration;
  /// Record wall-clock solve times. Disable for byte-reproducible reports.
  bool timing = true;
};

/// Runs every method on every scenario with per-scenario seeds derived from
/// (seed, input_id). Throws ConfigError on an empty batch or method list.
BatchReport evaluate_batch(const std::vector<Scenario>& batch, const std::vector<MethodConfig>& methods,
                           std::uint64_t seed, const BatchOptions& opts = {});

std::string report_to_json(const BatchReport& report);
/// Header: method,acc,simp,<six property names>,mean_time_ms. Absent values
/// are written as NA.
std::string report_to_csv(const BatchReport& report);

}  // namespace rae
