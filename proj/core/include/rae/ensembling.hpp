#pragma once

// Ensembling methods: naive (plurality vote), augmented and robust
// (plurality vote plus counterfactuals), and argumentative ensembling, which
// returns a cardinality-maximal extension of the scenario's BAF.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rae/scenario.hpp"
#include "rae/semantics.hpp"

namespace rae {

struct SolutionDiagnostics {
  std::size_t extension_count = 0;
  bool tie_broken = false;
  std::uint64_t seed_used = 0;
  /// Full extension family (member names), argumentative methods only.
  std::vector<std::vector<std::string>> extensions;
};

struct Solution {
  std::string method;
  /// Indices into Scenario::models / Scenario::counterfactuals, ascending.
  std::vector<std::size_t> models;
  std::vector<std::size_t> counterfactuals;
  /// Absent only when no model is selected.
  std::optional<Label> aggregated_label;
  SolutionDiagnostics diagnostics;

  bool has_model(std::size_t i) const;
  bool has_counterfactual(std::size_t i) const;
};

/// Labels with the most models predicting them, in label_set order.
std::vector<Label> top_labels(const Scenario& s);

Solution naive_ensemble(const Scenario& s, std::uint64_t seed);
Solution augmented_ensemble(const Scenario& s, std::uint64_t seed);
Solution robust_ensemble(const Scenario& s, std::uint64_t seed);

/// Selects one cardinality-maximal extension of P^sem. Ties are broken by,
/// in order: agreement with the naive label drawn from the same seed; for
/// stable and d-preferred, containing at least one model and one
/// counterfactual; a seeded uniform draw over the canonical order.
/// Propagates CapacityError.
Solution argumentative_ensemble(const Scenario& s, Semantics sem, const PreferenceRanking& pref,
                                std::uint64_t seed, const EnumerationOptions& opts = {});

/// {"method","models","counterfactuals","label","diagnostics"}; the
/// extension family is included when `explain` is set.
std::string solution_to_json(const Scenario& s, const Solution& sol, bool explain = false);

}  // namespace rae
