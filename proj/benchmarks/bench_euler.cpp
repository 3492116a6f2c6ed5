#include <spinscape/euler.hpp>
#include <spinscape/mixture.hpp>

#include <benchmark/benchmark.h>

using spinscape::euler_asymptotic;
using spinscape::euler_exact;
using spinscape::Mixture;
using spinscape::OscMode;
using spinscape::oscillatory_integral;

static const Mixture kMix = Mixture::make({{2, 0.5}, {4, 0.5}});

static void BM_EulerExactInWindow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto chi = euler_exact(n, -0.6, kMix);
        benchmark::DoNotOptimize(chi);
    }
}

static void BM_EulerExactDeep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto chi = euler_exact(n, -2.0, kMix);
        benchmark::DoNotOptimize(chi);
    }
}

static void BM_EulerAsymptotic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto approx = euler_asymptotic(n, -0.6, kMix);
        benchmark::DoNotOptimize(approx);
    }
}

static void BM_OscillatoryDirect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto integral = oscillatory_integral(0.0, 1.0, 0.5, n, OscMode::Direct);
        benchmark::DoNotOptimize(integral);
    }
}

BENCHMARK(BM_EulerExactInWindow)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

BENCHMARK(BM_EulerExactDeep)->Arg(50)->Arg(100)->Arg(200);

BENCHMARK(BM_EulerAsymptotic)->Arg(100)->Arg(1000)->Arg(10000);

BENCHMARK(BM_OscillatoryDirect)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
