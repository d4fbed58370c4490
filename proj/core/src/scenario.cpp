#include "rae/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "rae/errors.hpp"
#include "rae/random.hpp"

namespace rae {

Label Scenario::prediction_on_counterfactual(std::size_t model, std::size_t counterfactual) const {
  return counterfactuals[counterfactual].predictions.at(models[model].id);
}

std::optional<std::size_t> Scenario::model_index(std::string_view id) const {
  for (std::size_t i = 0; i < models.size(); ++i)
    if (models[i].id == id) return i;
  return std::nullopt;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNoModels: return "no-models";
    case ViolationKind::kCountMismatch: return "count-mismatch";
    case ViolationKind::kDuplicateLabel: return "duplicate-label";
    case ViolationKind::kDuplicateModelId: return "duplicate-model-id";
    case ViolationKind::kDuplicateCounterfactualId: return "duplicate-counterfactual-id";
    case ViolationKind::kUnknownLabel: return "unknown-label";
    case ViolationKind::kUnknownOwner: return "unknown-owner";
    case ViolationKind::kOwnerMisaligned: return "owner-misaligned";
    case ViolationKind::kIncompletePredictions: return "incomplete-predictions";
    case ViolationKind::kOwnValidity: return "own-validity";
    case ViolationKind::kNonFiniteProperty: return "non-finite-property";
    case ViolationKind::kPropertySetMismatch: return "property-set-mismatch";
    case ViolationKind::kPreferenceIncomplete: return "preference-incomplete";
    case ViolationKind::kUnknownPriorityProperty: return "unknown-priority-property";
  }
  return "unknown";
}

ValidationReport validate_scenario(const Scenario& s) {
  ValidationReport report;
  auto add = [&](ViolationKind k, std::string msg) { report.push_back({k, std::move(msg)}); };

  if (s.models.empty()) add(ViolationKind::kNoModels, "scenario has no models");
  if (s.models.size() != s.counterfactuals.size())
    add(ViolationKind::kCountMismatch, std::to_string(s.models.size()) + " models but " +
                                           std::to_string(s.counterfactuals.size()) +
                                           " counterfactuals");

  const std::set<Label> labels(s.label_set.begin(), s.label_set.end());
  if (labels.size() != s.label_set.size())
    add(ViolationKind::kDuplicateLabel, "label_set contains duplicates");
  auto known_label = [&](Label l) { return labels.contains(l); };

  std::set<std::string> model_ids;
  for (const auto& m : s.models) {
    if (!model_ids.insert(m.id).second)
      add(ViolationKind::kDuplicateModelId, "model id '" + m.id + "' is not unique");
    if (!known_label(m.prediction_on_x))
      add(ViolationKind::kUnknownLabel, "model '" + m.id + "' predicts label " +
                                            std::to_string(m.prediction_on_x) +
                                            " outside label_set");
    for (const auto& [name, value] : m.properties)
      if (!std::isfinite(value))
        add(ViolationKind::kNonFiniteProperty,
            "model '" + m.id + "' property '" + name + "' is not finite");
  }
  for (std::size_t i = 1; i < s.models.size(); ++i) {
    const auto& a = s.models.front().properties;
    const auto& b = s.models[i].properties;
    const bool same = a.size() == b.size() &&
                      std::equal(a.begin(), a.end(), b.begin(),
                                 [](const auto& x, const auto& y) { return x.first == y.first; });
    if (!same)
      add(ViolationKind::kPropertySetMismatch, "model '" + s.models[i].id +
                                                   "' declares a different property set than '" +
                                                   s.models.front().id + "'");
  }
  if (s.truth_label && !known_label(*s.truth_label))
    add(ViolationKind::kUnknownLabel, "truth_label outside label_set");

  std::set<std::string> ce_ids;
  for (std::size_t j = 0; j < s.counterfactuals.size(); ++j) {
    const auto& c = s.counterfactuals[j];
    if (!ce_ids.insert(c.id).second)
      add(ViolationKind::kDuplicateCounterfactualId, "counterfactual id '" + c.id + "' is not unique");
    if (!model_ids.contains(c.owner_model_id))
      add(ViolationKind::kUnknownOwner,
          "counterfactual '" + c.id + "' names unknown owner '" + c.owner_model_id + "'");
    else if (j < s.models.size() && s.models[j].id != c.owner_model_id)
      add(ViolationKind::kOwnerMisaligned, "counterfactual '" + c.id + "' at position " +
                                               std::to_string(j) + " is owned by '" +
                                               c.owner_model_id + "', expected '" +
                                               s.models[j].id + "'");
    for (const auto& m : s.models)
      if (!c.predictions.contains(m.id))
        add(ViolationKind::kIncompletePredictions,
            "counterfactual '" + c.id + "' lacks a prediction for model '" + m.id + "'");
    for (const auto& [mid, label] : c.predictions) {
      if (!model_ids.contains(mid))
        add(ViolationKind::kIncompletePredictions,
            "counterfactual '" + c.id + "' has a prediction for unknown model '" + mid + "'");
      if (!known_label(label))
        add(ViolationKind::kUnknownLabel, "counterfactual '" + c.id + "' prediction by '" + mid +
                                              "' is outside label_set");
    }
    if (auto owner = s.model_index(c.owner_model_id)) {
      auto it = c.predictions.find(c.owner_model_id);
      if (it != c.predictions.end() && it->second == s.models[*owner].prediction_on_x)
        add(ViolationKind::kOwnValidity, "counterfactual '" + c.id + "' does not flip its owner '" +
                                             c.owner_model_id + "'");
    }
  }

  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RankPreference>) {
          for (const auto& m : s.models) {
            auto it = p.ranks.find(m.id);
            if (it == p.ranks.end())
              add(ViolationKind::kPreferenceIncomplete, "no rank for model '" + m.id + "'");
            else if (!std::isfinite(it->second))
              add(ViolationKind::kPreferenceIncomplete, "rank of '" + m.id + "' is not finite");
          }
        } else if constexpr (std::is_same_v<T, PriorityPreference>) {
          std::set<std::string> seen;
          for (const auto& group : p.groups)
            for (const auto& name : group) {
              if (!seen.insert(name).second)
                add(ViolationKind::kUnknownPriorityProperty,
                    "property '" + name + "' appears in more than one priority group");
              for (const auto& m : s.models)
                if (!m.properties.contains(name)) {
                  add(ViolationKind::kUnknownPriorityProperty,
                      "model '" + m.id + "' lacks priority property '" + name + "'");
                  break;
                }
            }
        }
      },
      s.preference);
  return report;
}

PreferenceRanking derive_model_preference(const Scenario& s,
                                          const std::vector<std::vector<std::string>>& priority) {
  const std::size_t n = s.models.size();
  std::set<std::string> seen;
  for (const auto& group : priority) {
    if (group.empty()) throw ConfigError("empty property group in priority list");
    for (const auto& name : group) {
      if (!seen.insert(name).second)
        throw ConfigError("property '" + name + "' appears in more than one priority group");
      for (const auto& m : s.models)
        if (!m.properties.contains(name))
          throw ConfigError("unknown property '" + name + "' for model '" + m.id + "'");
    }
  }

  std::vector<std::vector<double>> scores(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& group : priority) {
      double sum = 0.0;
      for (const auto& name : group) sum += s.models[i].properties.at(name);
      scores[i].push_back(sum / static_cast<double>(group.size()));
    }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  PreferenceRanking ranking{std::vector<double>(n, 0.0)};
  double rank = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && scores[order[k]] != scores[order[k - 1]]) rank += 1.0;
    ranking.rank[order[k]] = rank;
  }
  return ranking;
}

PreferenceRanking resolve_preference(const Scenario& s) {
  return std::visit(
      [&](const auto& p) -> PreferenceRanking {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, UniformPreference>) {
          return PreferenceRanking::uniform(s.models.size());
        } else if constexpr (std::is_same_v<T, PriorityPreference>) {
          return derive_model_preference(s, p.groups);
        } else {
          PreferenceRanking r;
          for (const auto& m : s.models) {
            auto it = p.ranks.find(m.id);
            if (it == p.ranks.end()) throw ConfigError("no rank for model '" + m.id + "'");
            r.rank.push_back(it->second);
          }
          return r;
        }
      },
      s.preference);
}

// ---------------------------------------------------------------------------

namespace {

void check_rate(double r, const char* name) {
  if (!(r >= 0.0 && r <= 1.0))
    throw ConfigError(std::string(name) + " must lie in [0, 1]");
}

Label other_label(Rng& rng, std::size_t label_count, Label exclude) {
  Label l = static_cast<Label>(rng.index(label_count - 1));
  return l >= exclude ? l + 1 : l;
}

}  // namespace

Scenario generate_random_scenario(const GeneratorConfig& cfg, std::uint64_t seed) {
  if (cfg.n_models < 1) throw ConfigError("n_models must be at least 1");
  if (cfg.label_count < 2) throw ConfigError("label_count must be at least 2");
  check_rate(cfg.invalidity_rate, "invalidity_rate");
  check_rate(cfg.tie_rate, "tie_rate");
  if (cfg.truth) {
    check_rate(cfg.truth->consensus_accuracy, "consensus_accuracy");
    check_rate(cfg.truth->dissent_rate, "dissent_rate");
  }

  Rng rng(seed);
  const std::size_t n = cfg.n_models;
  const std::size_t labels = cfg.label_count;

  Scenario s;
  for (std::size_t l = 0; l < labels; ++l) s.label_set.push_back(static_cast<Label>(l));
  s.input_id = "x-" + std::to_string(seed);

  std::vector<Label> pred(n);
  if (cfg.truth) {
    const Label truth = static_cast<Label>(rng.index(labels));
    s.truth_label = truth;
    const Label consensus =
        rng.chance(cfg.truth->consensus_accuracy) ? truth : other_label(rng, labels, truth);
    for (auto& p : pred)
      p = rng.chance(cfg.truth->dissent_rate) ? other_label(rng, labels, consensus) : consensus;
  } else {
    for (auto& p : pred) p = static_cast<Label>(rng.index(labels));
  }

  // Label each counterfactual drives its owner to.
  std::vector<Label> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = other_label(rng, labels, pred[i]);

  static constexpr double kSimplicityGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    ModelRecord m;
    m.id = "M" + std::to_string(i + 1);
    m.prediction_on_x = pred[i];
    m.properties["accuracy"] = std::round((0.80 + 0.10 * rng.unit()) * 1000.0) / 1000.0;
    m.properties["simplicity"] = kSimplicityGrid[rng.index(5)];
    s.models.push_back(std::move(m));
    rank[i] = (i > 0 && rng.chance(cfg.tie_rate)) ? rank[rng.index(i)]
                                                   : std::round(rng.unit() * 1e6) / 1e6;
  }

  for (std::size_t i = 0; i < n; ++i) {
    CounterfactualRecord c;
    c.id = "c" + std::to_string(i + 1);
    c.owner_model_id = s.models[i].id;
    for (std::size_t j = 0; j < n; ++j) {
      Label value = target[i];
      if (j != i && pred[j] == pred[i] && rng.chance(cfg.invalidity_rate)) value = pred[j];
      c.predictions[s.models[j].id] = value;
    }
    s.counterfactuals.push_back(std::move(c));
  }

  RankPreference ranks;
  for (std::size_t i = 0; i < n; ++i) ranks.ranks[s.models[i].id] = rank[i];
  s.preference = std::move(ranks);
  return s;
}

std::vector<Scenario> generate_batch(const GeneratorConfig& cfg, std::size_t count,
                                     std::uint64_t seed) {
  std::vector<Scenario> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Scenario s = generate_random_scenario(cfg, derive_seed(seed, static_cast<std::uint64_t>(k)));
    std::string id = std::to_string(k);
    s.input_id = "x-" + std::string(id.size() < 5 ? 5 - id.size() : 0, '0') + id;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rae
