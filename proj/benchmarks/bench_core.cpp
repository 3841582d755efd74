#include <benchmark/benchmark.h>

#include "covbetti/atlas.hpp"
#include "covbetti/betti.hpp"
#include "covbetti/canonical.hpp"
#include "covbetti/covers.hpp"
#include "covbetti/families.hpp"
#include "covbetti/harness.hpp"

using namespace covbetti;

static void BM_CanonicalForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_graph(n, 0.5, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(10)->Arg(12);

static void BM_CanonicalFormRegular(benchmark::State& state) {
    const Graph g = build_family(family::CompleteBipartite{6, 6});
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(BM_CanonicalFormRegular);

static void BM_TauMax(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_graph(n, 0.3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tau_max(g));
    }
}
BENCHMARK(BM_TauMax)->Arg(16)->Arg(32)->Arg(48);

static void BM_BettiTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_graph(n, 0.4, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(betti_table(g, FieldSpec(2), 16));
    }
}
BENCHMARK(BM_BettiTable)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ProjDimHs4(benchmark::State& state) {
    const Graph g = build_family(family::Hs{4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(proj_dim(g));
    }
}
BENCHMARK(BM_ProjDimHs4)->Unit(benchmark::kMillisecond);

static void BM_BoundExhaustive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_bound_exhaustive(n));
    }
}
BENCHMARK(BM_BoundExhaustive)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
