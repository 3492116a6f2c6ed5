#include <spinscape/goe.hpp>
#include <spinscape/mixture.hpp>

#include <benchmark/benchmark.h>

using spinscape::crt_mean_identity;
using spinscape::direct_count_full;
using spinscape::Mixture;
using spinscape::sample_goe;

static const Mixture kMix = Mixture::make({{2, 0.5}, {4, 0.5}});

static void BM_SampleGoe(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto sample = sample_goe(n, seed++);
        benchmark::DoNotOptimize(sample);
    }
}

static void BM_CrtMeanIdentity(benchmark::State& state) {
    const int samples = static_cast<int>(state.range(0));
    const double inf = std::numeric_limits<double>::infinity();
    for (auto _ : state) {
        auto estimate = crt_mean_identity(2, 0, -inf, -1.0, kMix, samples, 7);
        benchmark::DoNotOptimize(estimate);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * samples);
}

static void BM_DirectCountFull(benchmark::State& state) {
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto counts = direct_count_full(2, kMix, -1.0, samples, 7);
        benchmark::DoNotOptimize(counts);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * samples);
}

BENCHMARK(BM_SampleGoe)->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK(BM_CrtMeanIdentity)->Arg(1000)->Arg(10000);

BENCHMARK(BM_DirectCountFull)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
