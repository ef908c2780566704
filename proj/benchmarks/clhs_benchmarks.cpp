#include <benchmark/benchmark.h>

#include "clhs/constraints.hpp"
#include "clhs/csrs.hpp"
#include "clhs/sampling.hpp"

namespace {

using namespace clhs;

DesignSpec pair_spec() {
  return DesignSpec({Distribution::uniform(0.0, 1.0, "x1"), Distribution::uniform(0.0, 2.0, "x2")},
                    {{0, Relation::less}});
}

// Ten shifted uniforms chained by less-than links.
DesignSpec chain_spec() {
  std::vector<Distribution> vars;
  std::vector<ConstraintLink> links;
  for (int i = 0; i < 10; ++i) {
    vars.push_back(Distribution::uniform(0.5 * i, 2.0 + 0.5 * i, "x" + std::to_string(i + 1)));
    if (i > 0) links.push_back({static_cast<std::size_t>(i - 1), Relation::less});
  }
  return DesignSpec(std::move(vars), std::move(links));
}

void BM_LhsColumn(benchmark::State& state) {
  const auto dist = Distribution::uniform(0.0, 1.0);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(lhs_column(dist, state.range(0), rng));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LhsColumn)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_ScoreVector(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto left = lhs_column(Distribution::uniform(0.0, 1.0), n, rng);
  const auto right = lhs_column(Distribution::uniform(0.0, 2.0), n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(score_vector(left, right, Relation::less));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScoreVector)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_PermuteToSatisfy(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto left = lhs_column(Distribution::uniform(0.0, 1.0), n, rng);
  auto right = lhs_column(Distribution::uniform(0.0, 2.0), n, rng);
  while (!existence_criterion(score_vector(left, right, Relation::less))) {
    right = lhs_column(Distribution::uniform(0.0, 2.0), n, rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(permute_to_satisfy(left, right, Relation::less, rng));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PermuteToSatisfy)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_ClhsPair(benchmark::State& state) {
  const auto spec = pair_spec();
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(clhs::clhs(spec, state.range(0), rng));
}
BENCHMARK(BM_ClhsPair)->RangeMultiplier(10)->Range(100, 100000);

void BM_ClhsChain(benchmark::State& state) {
  const auto spec = chain_spec();
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(clhs::clhs(spec, state.range(0), rng));
}
BENCHMARK(BM_ClhsChain)->RangeMultiplier(10)->Range(100, 10000);

void BM_CsrsPair(benchmark::State& state) {
  const auto spec = pair_spec();
  Rng rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(csrs(spec, state.range(0), rng));
}
BENCHMARK(BM_CsrsPair)->RangeMultiplier(10)->Range(100, 100000);

}  // namespace

BENCHMARK_MAIN();
