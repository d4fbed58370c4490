#include <benchmark/benchmark.h>

#include "rae/ensembling.hpp"
#include "rae/framework.hpp"
#include "rae/oracle.hpp"
#include "rae/properties.hpp"
#include "rae/semantics.hpp"

namespace {

// range(0): model count, range(1): semantics index, range(2): tie rate in percent.
rae::Scenario bench_scenario(const benchmark::State& state, std::uint64_t seed) {
  rae::GeneratorConfig cfg;
  cfg.n_models = static_cast<std::size_t>(state.range(0));
  cfg.invalidity_rate = 0.3;
  cfg.tie_rate = static_cast<double>(state.range(2)) / 100.0;
  return rae::generate_random_scenario(cfg, seed);
}

void BM_Enumerate(benchmark::State& state) {
  const rae::Semantics sem = rae::kAllSemantics[state.range(1)];
  const rae::Scenario s = bench_scenario(state, 17);
  const rae::Baf baf = rae::build_baf(s, rae::resolve_preference(s));
  for (auto _ : state) benchmark::DoNotOptimize(rae::enumerate_extensions(baf, sem));
  state.SetLabel(rae::to_string(sem));
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{10, 20, 30}, {0, 1, 2, 3}, {0, 100}})->Unit(benchmark::kMicrosecond);

void BM_ArgumentativeEnsemble(benchmark::State& state) {
  const rae::Semantics sem = rae::kAllSemantics[state.range(1)];
  const rae::Scenario s = bench_scenario(state, 23);
  const rae::PreferenceRanking pref = rae::resolve_preference(s);
  const rae::EnumerationOptions opts{rae::kMaxArguments};
  for (auto _ : state) benchmark::DoNotOptimize(rae::argumentative_ensemble(s, sem, pref, 0, opts));
  state.SetLabel(rae::to_string(sem));
}
BENCHMARK(BM_ArgumentativeEnsemble)->ArgsProduct({{10, 30, 50}, {1, 2}, {100}})->Unit(benchmark::kMicrosecond);

void BM_BuildBaf(benchmark::State& state) {
  const rae::Scenario s = bench_scenario(state, 5);
  const rae::PreferenceRanking pref = rae::resolve_preference(s);
  for (auto _ : state) benchmark::DoNotOptimize(rae::build_baf(s, pref));
}
BENCHMARK(BM_BuildBaf)->Args({10, 0, 30})->Args({30, 0, 30})->Args({60, 0, 30});

void BM_BruteForceOracle(benchmark::State& state) {
  const rae::Semantics sem = rae::kAllSemantics[state.range(1)];
  const rae::Scenario s = bench_scenario(state, 9);
  const rae::Baf baf = rae::build_baf(s, rae::resolve_preference(s));
  for (auto _ : state) benchmark::DoNotOptimize(rae::brute_force_extensions(baf, sem));
  state.SetLabel(rae::to_string(sem));
}
BENCHMARK(BM_BruteForceOracle)->ArgsProduct({{4, 6, 8}, {1, 2}, {100}})->Unit(benchmark::kMillisecond);

void BM_EvaluateBatch(benchmark::State& state) {
  rae::GeneratorConfig cfg;
  cfg.n_models = 10;
  cfg.invalidity_rate = 0.3;
  cfg.tie_rate = 0.3;
  cfg.truth = rae::TruthModel{};
  const auto batch = rae::generate_batch(cfg, static_cast<std::size_t>(state.range(0)), 3);
  std::vector<rae::MethodConfig> methods;
  for (const char* m : {"naive", "augmented", "robust", "arg:s-preferred"}) methods.push_back(rae::parse_method(m));
  rae::BatchOptions opts;
  opts.timing = false;
  for (auto _ : state) benchmark::DoNotOptimize(rae::evaluate_batch(batch, methods, 1, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateBatch)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
