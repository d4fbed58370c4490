#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rae/errors.hpp"
#include "rae/scenario.hpp"

namespace rae {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "/" + key, "missing required field");
  return *it;
}

Label as_label(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer label");
  return v.get<Label>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  return v.get<double>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  return v;
}

PreferenceSpec parse_preference(const json& v, const std::string& path) {
  const std::string mode = as_string(require(v, "mode", path), path + "/mode");
  if (mode == "uniform") return UniformPreference{};
  if (mode == "priority") {
    PriorityPreference p;
    const auto& groups = as_array(require(v, "priority", path), path + "/priority");
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const std::string gpath = path + "/priority/" + std::to_string(g);
      std::vector<std::string> names;
      for (std::size_t k = 0; k < as_array(groups[g], gpath).size(); ++k)
        names.push_back(as_string(groups[g][k], gpath + "/" + std::to_string(k)));
      p.groups.push_back(std::move(names));
    }
    return p;
  }
  if (mode == "ranks") {
    RankPreference r;
    const auto& ranks = require(v, "ranks", path);
    if (!ranks.is_object()) throw SchemaError(path + "/ranks", "expected an object");
    for (auto it = ranks.begin(); it != ranks.end(); ++it)
      r.ranks[it.key()] = as_number(it.value(), path + "/ranks/" + it.key());
    return r;
  }
  throw SchemaError(path + "/mode", "unknown preference mode '" + mode + "'");
}

Scenario from_json(const json& doc) {
  Scenario s;
  for (std::size_t i = 0; i < as_array(require(doc, "label_set", ""), "/label_set").size(); ++i)
    s.label_set.push_back(as_label(doc["label_set"][i], "/label_set/" + std::to_string(i)));
  s.input_id = as_string(require(doc, "input_id", ""), "/input_id");
  if (auto it = doc.find("truth_label"); it != doc.end() && !it->is_null())
    s.truth_label = as_label(*it, "/truth_label");

  const auto& models = as_array(require(doc, "models", ""), "/models");
  for (std::size_t i = 0; i < models.size(); ++i) {
    const std::string path = "/models/" + std::to_string(i);
    ModelRecord m;
    m.id = as_string(require(models[i], "id", path), path + "/id");
    m.prediction_on_x = as_label(require(models[i], "prediction", path), path + "/prediction");
    if (auto it = models[i].find("properties"); it != models[i].end()) {
      if (!it->is_object()) throw SchemaError(path + "/properties", "expected an object");
      for (auto p = it->begin(); p != it->end(); ++p)
        m.properties[p.key()] = as_number(p.value(), path + "/properties/" + p.key());
    }
    s.models.push_back(std::move(m));
  }

  const auto& ces = as_array(require(doc, "counterfactuals", ""), "/counterfactuals");
  for (std::size_t i = 0; i < ces.size(); ++i) {
    const std::string path = "/counterfactuals/" + std::to_string(i);
    CounterfactualRecord c;
    c.id = as_string(require(ces[i], "id", path), path + "/id");
    c.owner_model_id = as_string(require(ces[i], "owner", path), path + "/owner");
    const auto& preds = require(ces[i], "predictions", path);
    if (!preds.is_object()) throw SchemaError(path + "/predictions", "expected an object");
    for (auto p = preds.begin(); p != preds.end(); ++p)
      c.predictions[p.key()] = as_label(p.value(), path + "/predictions/" + p.key());
    for (const auto& m : s.models)
      if (!c.predictions.contains(m.id))
        throw SchemaError(path + "/predictions/" + m.id,
                          "missing prediction of model '" + m.id + "'");
    s.counterfactuals.push_back(std::move(c));
  }

  if (auto it = doc.find("preference"); it != doc.end())
    s.preference = parse_preference(*it, "/preference");
  return s;
}

ordered_json to_json(const Scenario& s) {
  ordered_json doc;
  doc["label_set"] = s.label_set;
  doc["input_id"] = s.input_id;
  if (s.truth_label) doc["truth_label"] = *s.truth_label;
  doc["models"] = ordered_json::array();
  for (const auto& m : s.models) {
    ordered_json jm;
    jm["id"] = m.id;
    jm["prediction"] = m.prediction_on_x;
    jm["properties"] = ordered_json::object();
    for (const auto& [k, v] : m.properties) jm["properties"][k] = v;
    doc["models"].push_back(std::move(jm));
  }
  doc["counterfactuals"] = ordered_json::array();
  for (const auto& c : s.counterfactuals) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["owner"] = c.owner_model_id;
    jc["predictions"] = ordered_json::object();
    for (const auto& [k, v] : c.predictions) jc["predictions"][k] = v;
    doc["counterfactuals"].push_back(std::move(jc));
  }
  ordered_json pref;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, UniformPreference>) {
          pref["mode"] = "uniform";
        } else if constexpr (std::is_same_v<T, PriorityPreference>) {
          pref["mode"] = "priority";
          pref["priority"] = p.groups;
        } else {
          pref["mode"] = "ranks";
          pref["ranks"] = ordered_json::object();
          for (const auto& [k, v] : p.ranks) pref["ranks"][k] = v;
        }
      },
      s.preference);
  doc["preference"] = std::move(pref);
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what(),
                     line, column);
  }
  return from_json(doc);
}

std::string serialize_scenario(const Scenario& s) { return to_json(s).dump(); }

std::vector<Scenario> parse_batch(std::string_view text) {
  std::vector<Scenario> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        out.push_back(parse_scenario(line));
      } catch (const ParseError& e) {
        throw ParseError("batch line " + std::to_string(line_no) + ": " + e.what(), line_no,
                         e.column());
      } catch (const SchemaError& e) {
        throw SchemaError("line " + std::to_string(line_no) + e.path(),
                          std::string(e.what()).substr(e.path().size() + 2));
      }
    }
    start = end + 1;
  }
  return out;
}

std::string serialize_batch(const std::vector<Scenario>& batch) {
  std::string out;
  for (const auto& s : batch) {
    out += serialize_scenario(s);
    out += '\n';
  }
  return out;
}

Scenario load_scenario_file(const std::string& path) { return parse_scenario(read_file(path)); }

std::vector<Scenario> load_batch_file(const std::string& path) {
  return parse_batch(read_file(path));
}

}  // namespace rae
