#include <benchmark/benchmark.h>

#include <vector>

#include "treepack/decomposition.hpp"
#include "treepack/families.hpp"
#include "treepack/partition.hpp"
#include "treepack/support_weights.hpp"
#include "treepack/wpc.hpp"

using namespace treepack;

static void BM_PartitionEnumeration(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for_each_partition(t, [&](const Partition&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionEnumeration)->Arg(6)->Arg(8)->Arg(10);

static void BM_WpcScan(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  auto h = full_edge_bundle(t, 2, 0);
  for (auto _ : state) {
    auto r = is_k_wpc(h, 2);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_WpcScan)->Arg(5)->Arg(7)->Arg(9);

static void BM_DecompositionEnumeration(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  std::vector<std::vector<std::pair<int, int>>> middles;
  auto block = saturated_star_block(t, 2, 0, 0, middles);
  auto g = flatten(block.certificate.assignment);
  for (auto _ : state) {
    long long n = count_decompositions(g, 2);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_DecompositionEnumeration)->Arg(3)->Arg(4)->Arg(5);

static void BM_LabelledTrees(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<int> support;
  for (int i = 0; i < m; ++i) support.push_back(i);
  for (auto _ : state) {
    auto trees = labelled_trees_on(support);
    benchmark::DoNotOptimize(trees.size());
  }
}
BENCHMARK(BM_LabelledTrees)->Arg(4)->Arg(5)->Arg(6);

static void BM_WeightConditions(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  std::vector<std::vector<int>> sets(t);
  for (int j = 0; j < t; ++j) {
    for (int x = 1; x <= t; ++x) sets[j].push_back(x);
  }
  auto f = make_index_family(t, sets);
  for (auto _ : state) {
    auto r = check_weight_conditions(f, t);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_WeightConditions)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
