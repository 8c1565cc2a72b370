#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "maryland/cocycle.hpp"
#include "maryland/minsol.hpp"
#include "maryland/sigma.hpp"

namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

void BM_LogSigmaSeries(benchmark::State& state) {
    auto ctx = maryland::SigmaContext::create(kGolden);
    std::complex<double> z(0.7, -2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.log_sigma(z));
    }
}
BENCHMARK(BM_LogSigmaSeries);

void BM_LogSigmaBand(benchmark::State& state) {
    auto ctx = maryland::SigmaContext::create(kGolden);
    std::complex<double> z(0.7, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.log_sigma(z));
    }
}
BENCHMARK(BM_LogSigmaBand);

void BM_CocycleProduct(benchmark::State& state) {
    maryland::SpectralParams p{kGolden, 0.3, -2.0, 1.0};
    long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maryland::cocycle_product(p, n));
    }
}
BENCHMARK(BM_CocycleProduct)->Arg(100)->Arg(10000);

void BM_CocycleProductExtended(benchmark::State& state) {
    maryland::SpectralParams p{kGolden, 0.3, -2.0, 1.0};
    maryland::CocycleOptions opts;
    opts.precision = maryland::Precision::kExtended;
    for (auto _ : state) {
        benchmark::DoNotOptimize(maryland::cocycle_product(p, 100, opts));
    }
}
BENCHMARK(BM_CocycleProductExtended);

void BM_MinSolAxis(benchmark::State& state) {
    auto ctx = maryland::MinSolContext::create(kGolden, -2.0, 1.0);
    for (auto _ : state) {
        // bypass the memo cache by nudging the argument each iteration
        double eps = 1e-9 * static_cast<double>(state.iterations());
        benchmark::DoNotOptimize(ctx.upsilon_real({0.3 + eps, 0.0}));
    }
}
BENCHMARK(BM_MinSolAxis)->Unit(benchmark::kMillisecond);

void BM_MinSolHighAltitude(benchmark::State& state) {
    auto ctx = maryland::MinSolContext::create(kGolden, -2.0, 1.0);
    ctx.upsilon({0.3, 2.0});  // amortized residue enumeration
    for (auto _ : state) {
        double eps = 1e-9 * static_cast<double>(state.iterations());
        benchmark::DoNotOptimize(ctx.upsilon({0.3 + eps, 2.0}));
    }
}
BENCHMARK(BM_MinSolHighAltitude);

}  // namespace

BENCHMARK_MAIN();
