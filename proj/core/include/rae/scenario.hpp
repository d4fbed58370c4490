#pragma once

// Problem instances: a set of models, their predictions on one input, one
// counterfactual explanation per model and the cross-model validity of every
// counterfactual, plus a model preference specification.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rae {

using Label = std::int64_t;

struct ModelRecord {
  std::string id;
  Label prediction_on_x = 0;
  std::map<std::string, double> properties;

  friend bool operator==(const ModelRecord&, const ModelRecord&) = default;
};

struct CounterfactualRecord {
  std::string id;
  std::string owner_model_id;
  /// Prediction of every model on this counterfactual, keyed by model id.
  std::map<std::string, Label> predictions;

  friend bool operator==(const CounterfactualRecord&, const CounterfactualRecord&) = default;
};

/// Explicit numeric rank per model id; higher is more preferred.
struct RankPreference {
  std::map<std::string, double> ranks;
  friend bool operator==(const RankPreference&, const RankPreference&) = default;
};

/// Lexicographic priority over groups of equally-important properties.
struct PriorityPreference {
  std::vector<std::vector<std::string>> groups;
  friend bool operator==(const PriorityPreference&, const PriorityPreference&) = default;
};

/// Every model equally preferred.
struct UniformPreference {
  friend bool operator==(const UniformPreference&, const UniformPreference&) = default;
};

using PreferenceSpec = std::variant<UniformPreference, PriorityPreference, RankPreference>;

struct Scenario {
  std::vector<Label> label_set;
  std::string input_id;
  std::vector<ModelRecord> models;
  /// Index-aligned with `models`: counterfactuals[i] belongs to models[i].
  std::vector<CounterfactualRecord> counterfactuals;
  PreferenceSpec preference = UniformPreference{};
  std::optional<Label> truth_label;

  std::size_t model_count() const { return models.size(); }

  /// Prediction of model i on counterfactual j (M_i(c_j)). Requires a
  /// complete cross-validity matrix.
  Label prediction_on_counterfactual(std::size_t model, std::size_t counterfactual) const;

  /// True when c_j flips model i's prediction, i.e. M_i(c_j) != M_i(x).
  bool counterfactual_valid_on(std::size_t counterfactual, std::size_t model) const {
    return prediction_on_counterfactual(model, counterfactual) != models[model].prediction_on_x;
  }

  std::optional<std::size_t> model_index(std::string_view id) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Total preorder over models as numeric ranks, index-aligned with
/// Scenario::models. Higher rank is more preferred; equal ranks are ties.
struct PreferenceRanking {
  std::vector<double> rank;

  bool at_least_as_preferred(std::size_t i, std::size_t j) const { return rank[i] >= rank[j]; }
  bool strictly_preferred(std::size_t i, std::size_t j) const { return rank[i] > rank[j]; }

  static PreferenceRanking uniform(std::size_t n) { return {std::vector<double>(n, 0.0)}; }

  friend bool operator==(const PreferenceRanking&, const PreferenceRanking&) = default;
};

// ---------------------------------------------------------------------------
// I/O

/// Parses one scenario document. Checks structure and completeness of the
/// cross-validity matrix but not the semantic invariants (see
/// validate_scenario). Throws ParseError or SchemaError.
Scenario parse_scenario(std::string_view text);

/// Compact single-line JSON; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

/// Parses a JSON-lines batch, skipping blank lines. Errors carry the line.
std::vector<Scenario> parse_batch(std::string_view text);
std::string serialize_batch(const std::vector<Scenario>& batch);

Scenario load_scenario_file(const std::string& path);
std::vector<Scenario> load_batch_file(const std::string& path);

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  kNoModels,
  kCountMismatch,
  kDuplicateLabel,
  kDuplicateModelId,
  kDuplicateCounterfactualId,
  kUnknownLabel,
  kUnknownOwner,
  kOwnerMisaligned,
  kIncompletePredictions,
  kOwnValidity,
  kNonFiniteProperty,
  kPropertySetMismatch,
  kPreferenceIncomplete,
  kUnknownPriorityProperty,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Reports every violated scenario invariant; empty means valid.
ValidationReport validate_scenario(const Scenario& s);

const char* to_string(ViolationKind kind);

// ---------------------------------------------------------------------------
// Preferences

/// Lexicographic model preference from property priority groups. A group of
/// several properties scores a model by the mean of its values. An empty
/// priority list gives the uniform ranking. Throws ConfigError on unknown
/// property names or overlapping groups.
PreferenceRanking derive_model_preference(const Scenario& s,
                                          const std::vector<std::vector<std::string>>& priority);

/// Ranking described by the scenario's own preference specification.
PreferenceRanking resolve_preference(const Scenario& s);

// ---------------------------------------------------------------------------
// Synthetic generation

/// Optional latent ground truth for generated scenarios. The input has a
/// consensus label equal to the truth with probability `consensus_accuracy`;
/// each model dissents from the consensus with probability `dissent_rate`.
struct TruthModel {
  double consensus_accuracy = 0.85;
  double dissent_rate = 0.05;
};

struct GeneratorConfig {
  std::size_t n_models = 10;
  std::size_t label_count = 2;
  double invalidity_rate = 0.0;
  double tie_rate = 0.0;
  /// When unset, predictions on x are uniform over labels and no truth label
  /// is attached.
  std::optional<TruthModel> truth;
};

/// Deterministic random valid scenario. Throws ConfigError on bad config.
Scenario generate_random_scenario(const GeneratorConfig& cfg, std::uint64_t seed);

/// `count` scenarios with input ids "x-00000", "x-00001", ...
std::vector<Scenario> generate_batch(const GeneratorConfig& cfg, std::size_t count,
                                     std::uint64_t seed);

}  // namespace rae
