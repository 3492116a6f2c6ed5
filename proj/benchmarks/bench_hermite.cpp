#include <spinscape/hermite.hpp>

#include <benchmark/benchmark.h>

using spinscape::hermite_h;
using spinscape::hermite_phi;

static void BM_HermitePhi(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const double x = 0.3 * std::sqrt(2.0 * degree);
    for (auto _ : state) {
        auto eval = hermite_phi(degree, x);
        benchmark::DoNotOptimize(eval);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * degree);
}

static void BM_HermiteH(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto value = hermite_h(degree, 0.7);
        benchmark::DoNotOptimize(value);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * degree);
}

BENCHMARK(BM_HermitePhi)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

BENCHMARK(BM_HermiteH)->Arg(100)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
