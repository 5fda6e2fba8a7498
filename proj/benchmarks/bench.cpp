#include <benchmark/benchmark.h>

#include "bipham/compat.hpp"
#include "bipham/conditions.hpp"
#include "bipham/generators.hpp"
#include "bipham/hamilton.hpp"
#include "bipham/oracle.hpp"

using namespace bipham;

static void BM_Oracle(benchmark::State& state) {
  const auto d = gen_Dprime(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_hamiltonian(d));
  state.SetLabel("Dprime, order " + std::to_string(d.order()));
}
BENCHMARK(BM_Oracle)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_ExactCycle(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const auto d = gen_random_arcs(a, 7, 0.35);
  auto outcome = find_complete_matching(d);
  if (!std::holds_alternative<Matching>(outcome)) {
    state.SkipWithError("no complete matching");
    return;
  }
  const Matching m = std::get<Matching>(outcome);
  for (auto _ : state) benchmark::DoNotOptimize(longest_compatible_cycle(d, m, SearchMode::kExact));
}
BENCHMARK(BM_ExactCycle)->DenseRange(8, 24, 4)->Unit(benchmark::kMicrosecond);

static void BM_HeuristicCycle(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const auto d = gen_random_M(a, 3, -1).digraph;
  const Matching m = std::get<Matching>(find_complete_matching(d));
  for (auto _ : state) {
    benchmark::DoNotOptimize(longest_compatible_cycle(d, m, SearchMode::kHeuristic));
  }
}
BENCHMARK(BM_HeuristicCycle)->RangeMultiplier(2)->Range(4, 24)->Unit(benchmark::kMicrosecond);

static void BM_ConditionM(benchmark::State& state) {
  const auto d = gen_random_M(static_cast<int>(state.range(0)), 5, -1).digraph;
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_M(d));
}
BENCHMARK(BM_ConditionM)->RangeMultiplier(2)->Range(4, 32);

static void BM_ConditionA(benchmark::State& state) {
  const auto d = gen_random_M(static_cast<int>(state.range(0)), 5, -1).digraph;
  const Matching m = std::get<Matching>(find_complete_matching(d));
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_A(d, m));
}
BENCHMARK(BM_ConditionA)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

static void BM_Constructor(benchmark::State& state) {
  const auto d = gen_random_M(static_cast<int>(state.range(0)), 11, -1).digraph;
  HamiltonOptions options;
  options.mode = state.range(1) == 0 ? SearchMode::kExact : SearchMode::kHeuristic;
  for (auto _ : state) benchmark::DoNotOptimize(find_hamiltonian_cycle(d, options));
  state.SetLabel(state.range(1) == 0 ? "exact" : "heuristic");
}
BENCHMARK(BM_Constructor)
    ->ArgsProduct({{4, 8, 12, 16}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

static void BM_EnumerateClassThree(benchmark::State& state) {
  for (auto _ : state) {
    long m = 0;
    for_each_digraph(3, [&](std::uint64_t, const BipartiteDigraph& d) {
      m += check_condition_M(d).satisfied ? 1 : 0;
    });
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_EnumerateClassThree)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
  const auto d = gen_random_arcs(static_cast<int>(state.range(0)), 2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
