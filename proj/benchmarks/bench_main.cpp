#include <benchmark/benchmark.h>

#include "nulltree/bases.hpp"
#include "nulltree/exact_linalg.hpp"
#include "nulltree/generators.hpp"
#include "nulltree/matching.hpp"
#include "nulltree/null_decomposition.hpp"

using namespace nulltree;

static void BM_Kernel(benchmark::State& state) {
  const Tree t = random_tree(state.range(0), 1);
  const RationalMatrix a = adjacency_matrix(t);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(a));
}
BENCHMARK(BM_Kernel)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

static void BM_Decompose(benchmark::State& state) {
  const Tree t = random_tree(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(t));
}
BENCHMARK(BM_Decompose)->Arg(50)->Arg(100)->Arg(200);

static void BM_NullBasis(benchmark::State& state) {
  const Tree t = random_tree(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(tree_null_basis(t));
}
BENCHMARK(BM_NullBasis)->Arg(50)->Arg(100)->Arg(200);

static void BM_MatchingDPs(benchmark::State& state) {
  const Tree t = random_tree(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(matching_invariants(t));
}
BENCHMARK(BM_MatchingDPs)->Arg(100)->Arg(1000)->Arg(10000);
BENCHMARK_MAIN();
