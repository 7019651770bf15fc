#include <benchmark/benchmark.h>

#include "arbor/partitions.hpp"
#include "arbor/sequence.hpp"
#include "arbor/trees.hpp"

static void BM_a_gf(benchmark::State& state) {
    const int upto = static_cast<int>(state.range(0));
    for (auto _ : state) {
        arbor::SequenceTable table = arbor::a_gf(upto);
        benchmark::DoNotOptimize(table.at(upto));
    }
    state.SetComplexityN(upto);
}
BENCHMARK(BM_a_gf)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_a_eq1(benchmark::State& state) {
    const int upto = static_cast<int>(state.range(0));
    for (auto _ : state) {
        arbor::SequenceTable table;
        benchmark::DoNotOptimize(arbor::a_eq1(upto, table));
    }
}
BENCHMARK(BM_a_eq1)->Arg(20)->Arg(40)->Arg(60);

static void BM_a_eq3(benchmark::State& state) {
    const int upto = static_cast<int>(state.range(0));
    for (auto _ : state) {
        arbor::SequenceTable table;
        benchmark::DoNotOptimize(arbor::a_eq3(upto, table));
    }
}
BENCHMARK(BM_a_eq3)->Arg(20)->Arg(40)->Arg(60);

static void BM_enumerate_structural(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto trees = arbor::enumerate_structural(n);
        benchmark::DoNotOptimize(trees.size());
    }
}
BENCHMARK(BM_enumerate_structural)->Arg(8)->Arg(10)->Arg(12);

static void BM_enumerate_naive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(arbor::enumerate_naive(n));
    }
}
BENCHMARK(BM_enumerate_naive)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_partitions_all(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        arbor::for_each_partition(n, 1, [&](const arbor::Partition& p) {
            benchmark::DoNotOptimize(p.data());
            ++count;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_partitions_all)->Arg(30)->Arg(40)->Arg(50);

BENCHMARK_MAIN();
