#include <spinscape/complexity.hpp>
#include <spinscape/mixture.hpp>
#include <spinscape/parisi.hpp>

#include <benchmark/benchmark.h>

using spinscape::f1_finite_beta;
using spinscape::Mixture;
using spinscape::theta_k;
using spinscape::variational_oracle;

static const Mixture kMix = Mixture::make({{2, 0.5}, {4, 0.5}});

static void BM_ThetaK(benchmark::State& state) {
    for (auto _ : state) {
        double theta = theta_k(2, -1.7, kMix);
        benchmark::DoNotOptimize(theta);
    }
}

static void BM_VariationalOracle(benchmark::State& state) {
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double theta = variational_oracle(2, -1.7, kMix, grid, 3);
        benchmark::DoNotOptimize(theta);
    }
}

static void BM_F1FiniteBeta(benchmark::State& state) {
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto minimum = f1_finite_beta(20.0, kMix, grid);
        benchmark::DoNotOptimize(minimum);
    }
}

BENCHMARK(BM_ThetaK);

BENCHMARK(BM_VariationalOracle)->Arg(121)->Arg(241);

BENCHMARK(BM_F1FiniteBeta)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
