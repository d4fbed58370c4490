#include "rae/ensembling.hpp"

#include <algorithm>

#include "json.hpp"
#include "rae/framework.hpp"
#include "rae/random.hpp"

namespace rae {
namespace {

constexpr std::uint64_t kNaiveStream = 0;
constexpr std::uint64_t kTieStream = 1;

bool sorted_contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

Label naive_label(const Scenario& s, std::uint64_t seed) {
  const auto top = top_labels(s);
  if (top.size() == 1) return top.front();
  Rng rng(derive_seed(seed, kNaiveStream));
  return top[rng.index(top.size())];
}

Solution models_predicting(const Scenario& s, Label label, std::string method, std::uint64_t seed) {
  Solution sol;
  sol.method = std::move(method);
  for (std::size_t i = 0; i < s.models.size(); ++i)
    if (s.models[i].prediction_on_x == label) sol.models.push_back(i);
  sol.aggregated_label = label;
  sol.diagnostics.seed_used = seed;
  sol.diagnostics.tie_broken = top_labels(s).size() > 1;
  return sol;
}

// Label shared by the models of an extension, if it has any.
std::optional<Label> extension_label(const Scenario& s, const ArgumentSet& e) {
  const std::size_t m = s.models.size();
  for (std::size_t i = 0; i < m; ++i)
    if (e.contains(i)) return s.models[i].prediction_on_x;
  return std::nullopt;
}

bool has_model_and_counterfactual(const ArgumentSet& e, std::size_t m) {
  bool model = false, ce = false;
  e.for_each([&](std::size_t a) { (a < m ? model : ce) = true; });
  return model && ce;
}

}  // namespace

bool Solution::has_model(std::size_t i) const { return sorted_contains(models, i); }
bool Solution::has_counterfactual(std::size_t i) const {
  return sorted_contains(counterfactuals, i);
}

std::vector<Label> top_labels(const Scenario& s) {
  std::vector<std::size_t> counts(s.label_set.size(), 0);
  for (const auto& m : s.models)
    for (std::size_t l = 0; l < s.label_set.size(); ++l)
      if (s.label_set[l] == m.prediction_on_x) ++counts[l];
  const std::size_t best = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  std::vector<Label> top;
  for (std::size_t l = 0; l < counts.size(); ++l)
    if (counts[l] == best && best > 0) top.push_back(s.label_set[l]);
  return top;
}

Solution naive_ensemble(const Scenario& s, std::uint64_t seed) {
  return models_predicting(s, naive_label(s, seed), "naive", seed);
}

Solution augmented_ensemble(const Scenario& s, std::uint64_t seed) {
  Solution sol = models_predicting(s, naive_label(s, seed), "augmented", seed);
  sol.counterfactuals = sol.models;
  return sol;
}

Solution robust_ensemble(const Scenario& s, std::uint64_t seed) {
  Solution sol = models_predicting(s, naive_label(s, seed), "robust", seed);
  for (std::size_t i : sol.models) {
    const bool valid_everywhere = std::all_of(sol.models.begin(), sol.models.end(), [&](std::size_t j) {
      return s.counterfactual_valid_on(i, j);
    });
    if (valid_everywhere) sol.counterfactuals.push_back(i);
  }
  return sol;
}

Solution argumentative_ensemble(const Scenario& s, Semantics sem, const PreferenceRanking& pref,
                                std::uint64_t seed, const EnumerationOptions& opts) {
  const std::size_t m = s.models.size();
  const Baf baf = build_baf(s, pref);
  const ExtensionSet family = enumerate_extensions(baf, sem, opts);

  Solution sol;
  sol.method = std::string("arg:") + to_string(sem);
  sol.diagnostics.seed_used = seed;
  sol.diagnostics.extension_count = family.size();
  for (const auto& e : family) {
    auto names = baf.names_of(e);
    std::sort(names.begin(), names.end());
    sol.diagnostics.extensions.push_back(std::move(names));
  }
  if (family.empty()) return sol;

  // Canonical order puts the largest extensions first.
  std::vector<ArgumentSet> pool;
  for (const auto& e : family)
    if (e.size() == family[0].size()) pool.push_back(e);

  if (pool.size() > 1) {
    sol.diagnostics.tie_broken = true;
    auto narrow = [&](auto&& keep) {
      std::vector<ArgumentSet> kept;
      std::copy_if(pool.begin(), pool.end(), std::back_inserter(kept), keep);
      if (!kept.empty()) pool = std::move(kept);
    };
    const Label majority = naive_label(s, seed);
    narrow([&](const ArgumentSet& e) { return extension_label(s, e) == majority; });
    if (sem == Semantics::kDPreferred || sem == Semantics::kStable)
      narrow([&](const ArgumentSet& e) { return has_model_and_counterfactual(e, m); });
  }

  const ArgumentSet& chosen =
      pool.size() == 1 ? pool.front() : pool[Rng(derive_seed(seed, kTieStream)).index(pool.size())];
  chosen.for_each([&](std::size_t a) {
    if (a < m)
      sol.models.push_back(a);
    else
      sol.counterfactuals.push_back(a - m);
  });
  sol.aggregated_label = extension_label(s, chosen);
  return sol;
}

std::string solution_to_json(const Scenario& s, const Solution& sol, bool explain) {
  nlohmann::ordered_json doc;
  doc["method"] = sol.method;
  doc["models"] = nlohmann::ordered_json::array();
  for (std::size_t i : sol.models) doc["models"].push_back(s.models[i].id);
  doc["counterfactuals"] = nlohmann::ordered_json::array();
  for (std::size_t i : sol.counterfactuals) doc["counterfactuals"].push_back(s.counterfactuals[i].id);
  if (sol.aggregated_label)
    doc["label"] = *sol.aggregated_label;
  else
    doc["label"] = nullptr;
  auto& diag = doc["diagnostics"];
  diag["extension_count"] = sol.diagnostics.extension_count;
  diag["tie_broken"] = sol.diagnostics.tie_broken;
  diag["seed_used"] = sol.diagnostics.seed_used;
  if (explain) diag["extensions"] = sol.diagnostics.extensions;
  return doc.dump(2);
}

}  // namespace rae
