#include <benchmark/benchmark.h>

#include "kostka/bounded_counts.hpp"
#include "kostka/kostka_engine.hpp"
#include "kostka/tableau.hpp"

using namespace kostka;

static void BM_Matrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kostka_matrix(n));
}
BENCHMARK(BM_Matrix)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static Composition ones(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

static void BM_DynamicProgram(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SkewShape shape(Partition{n - n / 2, n / 2});
    for (auto _ : state) {
        KostkaEngine engine;
        benchmark::DoNotOptimize(engine.kostka(shape, ones(n)));
    }
}
BENCHMARK(BM_DynamicProgram)->DenseRange(4, 12, 2);

static void BM_Enumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SkewShape shape(Partition{n - n / 2, n / 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(count_ssyt(shape, ones(n)));
}
BENCHMARK(BM_Enumeration)->DenseRange(4, 12, 2);

static void BM_BoundedCount(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const BoundVector x(std::vector<int>(static_cast<std::size_t>(r), 10));
    for (auto _ : state)
        benchmark::DoNotOptimize(s_count(x, x.total() / 2));
}
BENCHMARK(BM_BoundedCount)->RangeMultiplier(2)->Range(2, 64);
BENCHMARK_MAIN();
