#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rae/ensembling.hpp"
#include "rae/errors.hpp"
#include "rae/framework.hpp"
#include "rae/properties.hpp"
#include "rae/random.hpp"
#include "rae/scenario.hpp"
#include "rae/semantics.hpp"

namespace rae::cli {
namespace {

// Thrown for flag combinations CLI11 cannot express; maps to kUsage.
struct UsageError : Error {
  using Error::Error;
};

void emit(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << data;
}

bool report_violations(const Scenario& s, const std::string& where, std::ostream& err) {
  const ValidationReport report = validate_scenario(s);
  for (const auto& v : report)
    err << "invalid scenario" << where << ": " << to_string(v.kind) << ": " << v.message << '\n';
  return report.empty();
}

bool starts_method(std::string_view token) {
  for (std::string_view head : {"naive", "augmented", "robust", "arg"})
    if (token.starts_with(head)) return true;
  return false;
}

// Splits a method list on ',' and '+'. A piece that does not start a new
// method belongs to the previous one, so "arg:s-preferred:accuracy+simplicity"
// survives intact.
std::vector<MethodConfig> parse_method_list(const std::string& text) {
  std::vector<std::string> specs;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',' && text[i] != '+') continue;
    const std::string piece = text.substr(start, i - start);
    if (specs.empty() || starts_method(piece))
      specs.push_back(piece);
    else
      specs.back() += text[start - 1] + piece;
    start = i + 1;
  }
  std::vector<MethodConfig> methods;
  for (const auto& spec : specs) methods.push_back(parse_method(spec));
  return methods;
}

MethodConfig solve_method(const std::string& method, const std::string& semantics) {
  if (method != "arg") return parse_method(method);
  auto sem = parse_semantics(semantics);
  if (!sem) throw UsageError("unknown semantics '" + semantics + "'");
  MethodConfig m;
  m.kind = MethodKind::kArgumentative;
  m.semantics = *sem;
  return m;
}

struct SolveArgs {
  std::string scenario, method = "arg", semantics = "s-preferred", pref, dot, output;
  std::uint64_t seed = 0;
  bool explain = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Scenario s = load_scenario_file(a.scenario);
  if (!report_violations(s, "", err)) return kInvalidInput;

  MethodConfig method = solve_method(a.method, a.semantics);
  if (!a.pref.empty()) method.priority = parse_priority(a.pref);
  const Solution sol = run_method(s, method, a.seed);

  if (!a.dot.empty()) {
    const PreferenceRanking pref =
        method.priority ? derive_model_preference(s, *method.priority) : resolve_preference(s);
    emit(a.dot, to_dot(build_baf(s, pref)), out);
  }
  emit(a.output, solution_to_json(s, sol, a.explain) + "\n", out);
  return kOk;
}

struct EvaluateArgs {
  std::string batch, methods = "naive,augmented,robust,arg:s-preferred", pref, format = "csv", output;
  std::uint64_t seed = 0;
  bool timing = false;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<Scenario> batch = load_batch_file(a.batch);
  bool valid = true;
  for (std::size_t i = 0; i < batch.size(); ++i)
    valid = report_violations(batch[i], " at line " + std::to_string(i + 1), err) && valid;
  if (!valid) return kInvalidInput;

  std::vector<MethodConfig> methods = parse_method_list(a.methods);
  if (!a.pref.empty())
    for (auto& m : methods)
      if (m.kind == MethodKind::kArgumentative && !m.priority) m.priority = parse_priority(a.pref);

  BatchOptions opts;
  opts.timing = a.timing;
  const BatchReport report = evaluate_batch(batch, methods, a.seed, opts);
  emit(a.output, a.format == "json" ? report_to_json(report) + "\n" : report_to_csv(report), out);
  return kOk;
}

struct OracleArgs {
  OracleCheckConfig cfg;
  std::string reproducer = "oracle-reproducer.json";
};

int cmd_oracle_check(const OracleArgs& a, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  const OracleCheckResult result = run_oracle_check(a.cfg, hooks.baf_enumerator, hooks.aaf_enumerator);
  if (!result.mismatch) {
    out << "oracle-check: " << result.scenarios_checked << " scenarios, " << result.comparisons
        << " comparisons, no disagreement\n";
    return kOk;
  }
  const OracleMismatch& m = *result.mismatch;
  emit(a.reproducer, serialize_scenario(m.scenario) + "\n", out);
  nlohmann::ordered_json doc;
  doc["check"] = m.semantics;
  doc["expected"] = m.expected;
  doc["actual"] = m.actual;
  doc["scenario"] = nlohmann::ordered_json::parse(serialize_scenario(m.scenario));
  out << doc.dump(2) << '\n';
  err << "oracle-check: mismatch on " << m.semantics << " after " << result.scenarios_checked
      << " scenarios; reproducer written to " << a.reproducer << '\n';
  return kOracleMismatch;
}

struct BenchArgs {
  std::vector<std::size_t> sizes{10, 20, 30};
  std::string semantics = "s-preferred,d-preferred";
  std::uint64_t seed = 0;
  std::size_t reps = 5;
  double invalidity = 0.3;
  double ties = 1.0;
  std::string output;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.sizes.empty() || std::find(a.sizes.begin(), a.sizes.end(), 0) != a.sizes.end())
    throw UsageError("--sizes must list positive model counts");
  if (a.reps == 0) throw UsageError("--reps must be positive");
  std::vector<Semantics> sems;
  std::stringstream list(a.semantics);
  for (std::string name; std::getline(list, name, ',');) {
    auto sem = parse_semantics(name);
    if (!sem) throw UsageError("unknown semantics '" + name + "'");
    sems.push_back(*sem);
  }

  std::string csv = "n_models,semantics,mean_ms,p95_ms\n";
  for (std::size_t n : a.sizes) {
    GeneratorConfig gen;
    gen.n_models = n;
    gen.invalidity_rate = a.invalidity;
    gen.tie_rate = a.ties;
    std::vector<Scenario> scenarios;
    for (std::size_t r = 0; r < a.reps; ++r)
      scenarios.push_back(generate_random_scenario(gen, derive_seed(derive_seed(a.seed, n), r)));

    std::map<Semantics, double> means;
    for (Semantics sem : sems) {
      std::vector<double> ms;
      for (const auto& s : scenarios) {
        const auto start = std::chrono::steady_clock::now();
        argumentative_ensemble(s, sem, resolve_preference(s), 0);
        ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                         .count());
      }
      std::sort(ms.begin(), ms.end());
      double mean = 0.0;
      for (double t : ms) mean += t;
      mean /= static_cast<double>(ms.size());
      const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(ms.size())));
      const double p95 = ms[std::max<std::size_t>(rank, 1) - 1];
      means[sem] = mean;
      char row[128];
      std::snprintf(row, sizeof row, "%zu,%s,%.3f,%.3f\n", n, to_string(sem), mean, p95);
      csv += row;
    }
    if (means.count(Semantics::kSPreferred) && means.count(Semantics::kDPreferred)) {
      const bool ok = means[Semantics::kSPreferred] <= means[Semantics::kDPreferred];
      err << "soft check n_models=" << n << ": s-preferred mean " << (ok ? "<=" : ">")
          << " d-preferred mean" << (ok ? "" : " (not enforced)") << '\n';
    }
  }
  emit(a.output, csv, out);
  return kOk;
}

struct GenArgs {
  std::size_t n = 1;
  GeneratorConfig cfg;
  bool truth = false;
  TruthModel truth_model;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(GenArgs a, std::ostream& out) {
  if (a.cfg.n_models == 0) throw UsageError("--models must be positive");
  if (a.cfg.label_count < 2) throw UsageError("--labels must be at least 2");
  if (a.truth) a.cfg.truth = a.truth_model;
  emit(a.output, serialize_batch(generate_batch(a.cfg, a.n, a.seed)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Recourse-aware ensembling engine", "rae"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one scenario with one method");
  solve_cmd->add_option("--scenario", solve.scenario, "Scenario JSON file")->required();
  solve_cmd->add_option("--method", solve.method, "naive | augmented | robust | arg")
      ->check(CLI::IsMember({"naive", "augmented", "robust", "arg"}));
  solve_cmd->add_option("--semantics", solve.semantics, "stable | d-preferred | s-preferred | c-preferred");
  solve_cmd->add_option("--pref", solve.pref, "Property priority, e.g. accuracy,simplicity");
  solve_cmd->add_option("--seed", solve.seed, "Tie-break seed");
  solve_cmd->add_flag("--explain", solve.explain, "Include every extension in the output");
  solve_cmd->add_option("--dot", solve.dot, "Write the BAF in Graphviz format to this file");
  solve_cmd->add_option("-o,--output", solve.output, "Output file (default stdout)");

  EvaluateArgs evaluate;
  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate methods over a JSON-lines batch");
  eval_cmd->add_option("--batch", evaluate.batch, "JSON-lines batch file")->required();
  eval_cmd->add_option("--methods", evaluate.methods, "Methods separated by ',' or '+'");
  eval_cmd->add_option("--pref", evaluate.pref, "Property priority for argumentative methods");
  eval_cmd->add_option("--seed", evaluate.seed, "Master seed");
  eval_cmd->add_option("--format", evaluate.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  eval_cmd->add_flag("--timing", evaluate.timing, "Record solve times (output is then not reproducible)");
  eval_cmd->add_option("-o,--output", evaluate.output, "Output file (default stdout)");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Fuzz enumerators against the brute-force oracle");
  oracle_cmd->add_option("--n", oracle.cfg.scenarios, "Number of scenarios");
  oracle_cmd->add_option("--max-models", oracle.cfg.max_models, "Largest model count");
  oracle_cmd->add_option("--seed", oracle.cfg.seed, "Seed");
  oracle_cmd->add_option("--invalidity", oracle.cfg.invalidity_rate)->check(CLI::Range(0.0, 1.0));
  oracle_cmd->add_option("--ties", oracle.cfg.tie_rate)->check(CLI::Range(0.0, 1.0));
  oracle_cmd->add_option("--labels", oracle.cfg.label_count, "Number of labels")->check(CLI::Range(2, 16));
  oracle_cmd->add_option("--reproducer", oracle.reproducer, "Where to write a failing scenario");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time argumentative ensembling by model count");
  bench_cmd->add_option("--sizes", bench.sizes, "Model counts")->delimiter(',');
  bench_cmd->add_option("--semantics", bench.semantics, "Comma-separated semantics");
  bench_cmd->add_option("--seed", bench.seed, "Seed");
  bench_cmd->add_option("--reps", bench.reps, "Scenarios per size");
  bench_cmd->add_option("--invalidity", bench.invalidity)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--ties", bench.ties)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("-o,--output", bench.output, "Output file (default stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a JSON-lines batch of random scenarios");
  gen_cmd->add_option("--n", gen.n, "Number of scenarios");
  gen_cmd->add_option("--models", gen.cfg.n_models, "Models per scenario");
  gen_cmd->add_option("--labels", gen.cfg.label_count, "Number of labels");
  gen_cmd->add_option("--invalidity", gen.cfg.invalidity_rate)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--ties", gen.cfg.tie_rate)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_flag("--truth", gen.truth, "Attach truth labels from a correlated truth model");
  gen_cmd->add_option("--consensus", gen.truth_model.consensus_accuracy)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--dissent", gen.truth_model.dissent_rate)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*eval_cmd) return cmd_evaluate(evaluate, out, err);
    if (*oracle_cmd) return cmd_oracle_check(oracle, out, err, hooks);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*gen_cmd) return cmd_gen(gen, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace rae::cli
