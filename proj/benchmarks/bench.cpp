#include <benchmark/benchmark.h>

#include "gkzlift/classical.hpp"
#include "gkzlift/lift.hpp"
#include "gkzlift/relations.hpp"
#include "gkzlift/thetanum.hpp"
#include "gkzlift/zseries.hpp"

using namespace gkzlift;

static void BM_series_mul(benchmark::State& state) {
    long prec = state.range(0);
    QExpansion e4 = classical::eisenstein(4, prec);
    QExpansion e6 = classical::eisenstein(6, prec);
    for (auto _ : state) benchmark::DoNotOptimize(e4 * e6);
    state.SetComplexityN(prec);
}
BENCHMARK(BM_series_mul)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_zseries_div(benchmark::State& state) {
    long prec = state.range(0);
    ZSeries th = z_theta(prec);
    ZSeries d4 = z_rescale(z_delta(prec / 4 + 2), 4, prec + 4);
    ZSeries unit(d4.begin() + 4, d4.end());
    for (auto _ : state) benchmark::DoNotOptimize(z_div_unit(th, unit, prec));
}
BENCHMARK(BM_zseries_div)->Arg(1024)->Arg(4096);

static void BM_basis_m2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gkz::basis_weakly_holomorphic(2, 4, 40));
}
BENCHMARK(BM_basis_m2);

static void BM_lift_positive(benchmark::State& state) {
    long R = state.range(0);
    weil::VVForm f = weil::plus_to_vv(gkz::paper_example_g(R * R + 8));
    for (auto _ : state) benchmark::DoNotOptimize(lift::lift_positive_part(f, 2, 1, R));
}
BENCHMARK(BM_lift_positive)->Arg(20)->Arg(50);

static void BM_theta_sum(benchmark::State& state) {
    thetanum::LorentzModel L(1);
    thetanum::GrassmannPoint v(1, {0.21, 0.93});
    thetanum::ThetaParams p;
    p.r = 2;
    p.s = 2;
    p.t = 0;
    p.threads = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(thetanum::theta(L, {0.13, 1.1}, v, p));
}
BENCHMARK(BM_theta_sum)->Arg(1)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
