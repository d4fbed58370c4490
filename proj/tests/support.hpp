#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rae/framework.hpp"
#include "rae/scenario.hpp"
#include "rae/semantics.hpp"

namespace rae::testing {

using NameSet = std::set<std::string>;
using Family = std::set<NameSet>;

inline Scenario fixture(const std::string& name) {
  return load_scenario_file(std::string(RAE_FIXTURE_DIR) + "/" + name + ".json");
}

template <typename Framework>
Family family_names(const Framework& f, const ExtensionSet& family) {
  Family out;
  for (const auto& e : family) {
    auto names = f.names_of(e);
    out.insert(NameSet(names.begin(), names.end()));
  }
  return out;
}

inline GeneratorConfig fuzz_config(std::size_t models, double invalidity = 0.3, double ties = 0.3) {
  GeneratorConfig cfg;
  cfg.n_models = models;
  cfg.invalidity_rate = invalidity;
  cfg.tie_rate = ties;
  return cfg;
}

}  // namespace rae::testing
