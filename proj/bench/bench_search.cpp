// Serial reference search versus the sharded OpenMP kernel.

#include <benchmark/benchmark.h>

#include "pancyc/search.hpp"

using namespace pancyc;

static void BM_ReferenceMinChords(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::find_min_chords(n).m);
    }
}
BENCHMARK(BM_ReferenceMinChords)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ParallelMinChords(benchmark::State& state) {
    SearchConfig config;
    config.jobs = static_cast<int>(state.range(1));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_min_chords(n, config).m);
    }
}
BENCHMARK(BM_ParallelMinChords)
    ->ArgsProduct({benchmark::CreateDenseRange(8, 12, 2), {1, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

static void BM_ReferenceProveNone(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::prove_no_pancyclic(15, 3).examined);
    }
}
BENCHMARK(BM_ReferenceProveNone)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ParallelProveNone(benchmark::State& state) {
    SearchConfig config;
    config.jobs = static_cast<int>(state.range(0));
    config.degree_prune = state.range(1) != 0;
    std::uint64_t examined = 0;
    for (auto _ : state) {
        examined = prove_no_pancyclic(15, 3, config).examined;
        benchmark::DoNotOptimize(examined);
    }
    state.counters["sets/s"] = benchmark::Counter(static_cast<double>(examined), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_ParallelProveNone)->ArgsProduct({{1, 4}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ParallelProveNoneLarge(benchmark::State& state) {
    SearchConfig config;
    config.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prove_no_pancyclic(21, 3, config).examined);
    }
}
BENCHMARK(BM_ParallelProveNoneLarge)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
