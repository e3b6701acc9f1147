#include <benchmark/benchmark.h>

#include "casimir/casimir.hpp"

using namespace casimir;

static void BM_EvalDelta(benchmark::State& state) {
    const ScattererModel m = delta_scatterer(2.0);
    double k = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval(m, k));
        k += 1e-9;
    }
}
BENCHMARK(BM_EvalDelta);

static void BM_EvalBarrier(benchmark::State& state) {
    const ScattererModel m = rect_barrier_scatterer(3.0, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(eval(m, Complex(0.0, 2.0)));
}
BENCHMARK(BM_EvalBarrier);

static void BM_CavityDet(benchmark::State& state) {
    const CavityConfig c(delta_scatterer(1.0), delta_scatterer(3.0), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(cavity_det_s(c, 2.3));
}
BENCHMARK(BM_CavityDet);

// gamma = g L sweeps from nearly transparent to nearly perfect mirrors.
static void BM_ForceAdaptive(benchmark::State& state) {
    const CavityConfig c(delta_scatterer(static_cast<double>(state.range(0))),
                         delta_scatterer(static_cast<double>(state.range(0))), 1.0);
    long nodes = 0;
    for (auto _ : state) {
        const ForceResult f = casimir_force(c);
        nodes = f.nodes;
        benchmark::DoNotOptimize(f.value);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ForceAdaptive)->Arg(1)->Arg(10)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_ForceLaguerre(benchmark::State& state) {
    const CavityConfig c(delta_scatterer(10.0), delta_scatterer(10.0), 1.0);
    QuadratureSpec spec;
    spec.rule = QuadratureRule::GaussLaguerre;
    for (auto _ : state) benchmark::DoNotOptimize(casimir_force(c, spec).value);
}
BENCHMARK(BM_ForceLaguerre)->Unit(benchmark::kMicrosecond);

static void BM_EnergyAdaptive(benchmark::State& state) {
    const CavityConfig c(perfect_mirror(), perfect_mirror(), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(casimir_energy(c).value);
}
BENCHMARK(BM_EnergyAdaptive)->Unit(benchmark::kMicrosecond);

static void BM_ForceSeries(benchmark::State& state) {
    const CavityConfig c(delta_scatterer(1.0), delta_scatterer(1.0), 1.0);
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(casimir_force_series(c, n_max).value);
}
BENCHMARK(BM_ForceSeries)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_GaussLaguerreRule(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre_rule(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(48)->Arg(96);

static void BM_ModeSum(benchmark::State& state) {
    const CavityConfig c(delta_scatterer(1.0), delta_scatterer(1.0), 1.0);
    BoxSpec box;
    box.length = static_cast<double>(state.range(0));
    box.k_max = 200.0;
    for (auto _ : state) benchmark::DoNotOptimize(mode_sum_energy_shift(c, box));
}
BENCHMARK(BM_ModeSum)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
