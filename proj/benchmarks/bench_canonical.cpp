#include <benchmark/benchmark.h>

#include "sparsity/canonical.hpp"
#include "sparsity/oracle.hpp"

namespace {

void BM_CanonicalGame(benchmark::State& state, int k, int l) {
    const sparsity::SparsityParams params(k, l);
    const int n = static_cast<int>(state.range(0));
    const sparsity::Multigraph g = sparsity::random_tight_graph(n, params, 1);
    for (auto _ : state) {
        auto result = sparsity::run_canonical_game(g, params);
        benchmark::DoNotOptimize(result.accepted.data());
    }
    state.SetComplexityN(n);
}

void BM_RejectAfterTight(benchmark::State& state) {
    const sparsity::SparsityParams params(2, 3);
    const int n = static_cast<int>(state.range(0));
    sparsity::Multigraph g = sparsity::random_tight_graph(n, params, 1);
    // Every extra edge lands inside the single tight component.
    for (sparsity::Vertex v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    for (auto _ : state) {
        auto result = sparsity::run_canonical_game(g, params);
        benchmark::DoNotOptimize(result.rejected.data());
    }
    state.SetComplexityN(n);
}

}  // namespace

BENCHMARK_CAPTURE(BM_CanonicalGame, laman, 2, 3)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);
BENCHMARK_CAPTURE(BM_CanonicalGame, maps_and_trees, 3, 2)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK_CAPTURE(BM_CanonicalGame, upper_range, 3, 5)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_RejectAfterTight)->RangeMultiplier(2)->Range(64, 2048)->Complexity();
BENCHMARK_MAIN();
