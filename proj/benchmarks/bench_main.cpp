#include <benchmark/benchmark.h>

#include "flopcalc/bwb.hpp"
#include "flopcalc/homalg.hpp"
#include "flopcalc/pbundle.hpp"
#include "flopcalc/verify.hpp"

using namespace flopcalc;

static void BM_BottLine(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto w = bwb::line_bundle(n, 1000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bwb::bott_cohomology(w));
    }
}
BENCHMARK(BM_BottLine)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_Tensor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = bwb::sym_power_decompose(3, n);
    const auto b = bwb::HomogeneousBundle(n, {bwb::omega(n / 2, n)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(bwb::tensor(a, b));
    }
}
BENCHMARK(BM_Tensor)->Arg(2)->Arg(3)->Arg(4);

static void BM_CohomologyXSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const pbundle::ModelVariety v(n);
    for (auto _ : state) {
        for (int j = -2 * n - 2; j <= n + 2; ++j) {
            for (int k = -n - 2; k <= n + 2; ++k) {
                benchmark::DoNotOptimize(pbundle::cohomology_X(pbundle::XLineBundle(v, j, k)));
            }
        }
    }
}
BENCHMARK(BM_CohomologyXSweep)->Arg(2)->Arg(3)->Arg(4);

static void BM_IdealSelfChase(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(homalg::ext2_ideal_self_chase(2));
    }
}
BENCHMARK(BM_IdealSelfChase);

static void BM_ExtAgainstIdeal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int p = 1; p <= n; ++p) {
            benchmark::DoNotOptimize(homalg::ext_locally_free_vs_ideal(p, n));
        }
    }
}
BENCHMARK(BM_ExtAgainstIdeal)->Arg(2)->Arg(4)->Arg(6);

static void BM_VerifyAll(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify::run_all(max_n, state.range(1) != 0));
    }
}
BENCHMARK(BM_VerifyAll)->Args({3, 0})->Args({3, 1})->Args({4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
