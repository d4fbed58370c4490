#include "rae/properties.hpp"

#include <chrono>
#include <cstdio>

#include "json.hpp"
#include "rae/errors.hpp"
#include "rae/random.hpp"

namespace rae {
namespace {

bool models_agree(const Scenario& s, const Solution& sol) {
  for (std::size_t i : sol.models)
    if (s.models[i].prediction_on_x != s.models[sol.models.front()].prediction_on_x) return false;
  return true;
}

std::size_t adherents(const Scenario& s, Label l) {
  std::size_t n = 0;
  for (const auto& m : s.models) n += m.prediction_on_x == l ? 1 : 0;
  return n;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string format_number(std::optional<double> v, const char* fmt) {
  if (!v) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, *v);
  return buf;
}

}  // namespace

const char* to_string(PropertyId p) {
  switch (p) {
    case PropertyId::kNonEmptiness: return "non_emptiness";
    case PropertyId::kNonTriviality: return "non_triviality";
    case PropertyId::kModelAgreement: return "model_agreement";
    case PropertyId::kMajorityVote: return "majority_vote";
    case PropertyId::kCounterfactualValidity: return "counterfactual_validity";
    case PropertyId::kCounterfactualCoherence: return "counterfactual_coherence";
  }
  return "unknown";
}

bool check_property(const Scenario& s, const Solution& sol, PropertyId p) {
  switch (p) {
    case PropertyId::kNonEmptiness:
      return !sol.models.empty() && !sol.counterfactuals.empty();
    case PropertyId::kNonTriviality:
      return sol.models.size() > 1;
    case PropertyId::kModelAgreement:
      return models_agree(s, sol);
    case PropertyId::kMajorityVote: {
      if (sol.models.empty() || !models_agree(s, sol)) return false;
      const Label chosen = s.models[sol.models.front()].prediction_on_x;
      const std::size_t support = adherents(s, chosen);
      for (Label l : s.label_set)
        if (l != chosen && adherents(s, l) > support) return false;
      return true;
    }
    case PropertyId::kCounterfactualValidity:
      for (std::size_t i : sol.models)
        for (std::size_t j : sol.counterfactuals)
          if (!s.counterfactual_valid_on(j, i)) return false;
      return true;
    case PropertyId::kCounterfactualCoherence:
      for (std::size_t i = 0; i < s.models.size(); ++i)
        if (sol.has_model(i) != sol.has_counterfactual(i)) return false;
      return true;
  }
  return false;
}

std::string MethodConfig::name() const {
  switch (kind) {
    case MethodKind::kNaive: return "naive";
    case MethodKind::kAugmented: return "augmented";
    case MethodKind::kRobust: return "robust";
    case MethodKind::kArgumentative: break;
  }
  std::string out = std::string("arg:") + to_string(semantics);
  if (priority) {
    out += ':';
    for (std::size_t g = 0; g < priority->size(); ++g) {
      if (g) out += ',';
      for (std::size_t k = 0; k < (*priority)[g].size(); ++k) {
        if (k) out += '+';
        out += (*priority)[g][k];
      }
    }
  }
  return out;
}

std::vector<std::vector<std::string>> parse_priority(std::string_view text) {
  std::vector<std::vector<std::string>> groups;
  if (text.empty()) return groups;
  for (const auto& group : split(text, ',')) {
    auto names = split(group, '+');
    for (const auto& n : names)
      if (n.empty()) throw ConfigError("empty property name in priority '" + std::string(text) + "'");
    groups.push_back(std::move(names));
  }
  return groups;
}

MethodConfig parse_method(std::string_view text) {
  MethodConfig m;
  if (text == "naive") return m;
  if (text == "augmented") {
    m.kind = MethodKind::kAugmented;
    return m;
  }
  if (text == "robust") {
    m.kind = MethodKind::kRobust;
    return m;
  }
  if (text.starts_with("arg:")) {
    m.kind = MethodKind::kArgumentative;
    std::string_view rest = text.substr(4);
    const std::size_t colon = rest.find(':');
    auto sem = parse_semantics(rest.substr(0, colon));
    if (!sem) throw ConfigError("unknown semantics in method '" + std::string(text) + "'");
    m.semantics = *sem;
    if (colon != std::string_view::npos) m.priority = parse_priority(rest.substr(colon + 1));
    return m;
  }
  throw ConfigError("unknown method '" + std::string(text) + "'");
}

Solution run_method(const Scenario& s, const MethodConfig& method, std::uint64_t seed,
                    const EnumerationOptions& opts) {
  switch (method.kind) {
    case MethodKind::kNaive: return naive_ensemble(s, seed);
    case MethodKind::kAugmented: return augmented_ensemble(s, seed);
    case MethodKind::kRobust: return robust_ensemble(s, seed);
    case MethodKind::kArgumentative: break;
  }
  const PreferenceRanking pref =
      method.priority ? derive_model_preference(s, *method.priority) : resolve_preference(s);
  Solution sol = argumentative_ensemble(s, method.semantics, pref, seed, opts);
  sol.method = method.name();
  return sol;
}

BatchReport evaluate_batch(const std::vector<Scenario>& batch, const std::vector<MethodConfig>& methods,
                           std::uint64_t seed, const BatchOptions& opts) {
  if (batch.empty()) throw ConfigError("batch is empty");
  if (methods.empty()) throw ConfigError("no methods requested");

  BatchReport report;
  for (const auto& method : methods) {
    MethodReport r;
    r.method = method.name();
    r.scenarios = batch.size();
    std::size_t labelled = 0, correct = 0;
    std::size_t simplicity_count = 0;
    double simplicity_sum = 0.0;
    bool simplicity_known = true;
    std::array<std::size_t, 6> satisfied{};
    double seconds = 0.0;

    for (const auto& s : batch) {
      const std::uint64_t scenario_seed = derive_seed(seed, s.input_id);
      const auto start = std::chrono::steady_clock::now();
      const Solution sol = run_method(s, method, scenario_seed, opts.enumeration);
      seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      if (s.truth_label) {
        ++labelled;
        correct += sol.aggregated_label == s.truth_label ? 1 : 0;
      }
      if (!sol.models.empty()) {
        double sum = 0.0;
        for (std::size_t i : sol.models) {
          auto it = s.models[i].properties.find("simplicity");
          if (it == s.models[i].properties.end())
            simplicity_known = false;
          else
            sum += it->second;
        }
        simplicity_sum += sum / static_cast<double>(sol.models.size());
        ++simplicity_count;
      }
      for (std::size_t k = 0; k < kAllProperties.size(); ++k)
        satisfied[k] += check_property(s, sol, kAllProperties[k]) ? 1 : 0;
    }

    const double n = static_cast<double>(batch.size());
    if (labelled > 0) r.accuracy = static_cast<double>(correct) / static_cast<double>(labelled);
    if (simplicity_known && simplicity_count > 0)
      r.mean_simplicity = simplicity_sum / static_cast<double>(simplicity_count);
    for (std::size_t k = 0; k < satisfied.size(); ++k)
      r.satisfaction[k] = static_cast<double>(satisfied[k]) / n;
    if (opts.timing) r.mean_solve_seconds = seconds / n;
    report.methods.push_back(std::move(r));
  }
  return report;
}

std::string report_to_json(const BatchReport& report) {
  nlohmann::ordered_json doc;
  doc["methods"] = nlohmann::ordered_json::array();
  for (const auto& r : report.methods) {
    nlohmann::ordered_json j;
    j["method"] = r.method;
    j["scenarios"] = r.scenarios;
    j["accuracy"] = r.accuracy ? nlohmann::ordered_json(*r.accuracy) : nlohmann::ordered_json();
    j["mean_simplicity"] =
        r.mean_simplicity ? nlohmann::ordered_json(*r.mean_simplicity) : nlohmann::ordered_json();
    for (std::size_t k = 0; k < kAllProperties.size(); ++k)
      j["satisfaction"][to_string(kAllProperties[k])] = r.satisfaction[k];
    j["mean_time_ms"] = r.mean_solve_seconds ? nlohmann::ordered_json(*r.mean_solve_seconds * 1e3)
                                             : nlohmann::ordered_json();
    doc["methods"].push_back(std::move(j));
  }
  return doc.dump(2);
}

std::string report_to_csv(const BatchReport& report) {
  std::string out = "method,acc,simp";
  for (PropertyId p : kAllProperties) out += std::string(",") + to_string(p);
  out += ",mean_time_ms\n";
  for (const auto& r : report.methods) {
    out += r.method;
    out += ',' + format_number(r.accuracy, "%.4f");
    out += ',' + format_number(r.mean_simplicity, "%.4f");
    for (double rate : r.satisfaction) out += ',' + format_number(rate, "%.4f");
    out += ',' + format_number(r.mean_solve_seconds ? std::optional(*r.mean_solve_seconds * 1e3)
                                                    : std::nullopt,
                               "%.3f");
    out += '\n';
  }
  return out;
}

}  // namespace rae
