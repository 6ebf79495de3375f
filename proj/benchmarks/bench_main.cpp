#include <benchmark/benchmark.h>

#include "khplasma/khplasma.hpp"

using namespace khplasma;

static void BM_TotalEnergy(benchmark::State& state) {
    const ModelParams p = ModelParams::hydrogen(5.0, 0.01);
    for (auto _ : state) benchmark::DoNotOptimize(total_energy(p));
}
BENCHMARK(BM_TotalEnergy);

static void BM_V0Quadrature(benchmark::State& state) {
    const ModelParams p = ModelParams::hydrogen(10.0, 0.0, 0.05);
    const auto nodes = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(v0_quadrature(2.0, p, nodes));
}
BENCHMARK(BM_V0Quadrature)->Arg(64)->Arg(256);

static void BM_Table1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(regenerate_table1());
}
BENCHMARK(BM_Table1);

static void BM_OracleSolve(benchmark::State& state) {
    const ModelParams p = ModelParams::hydrogen(100.0, 0.01);
    const EffectiveCoefficients c = taylor_coefficients(p);
    const RadialGrid grid(1e-4, 50.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            solve_ground_state([&c](double r) { return veff_series_eval(r, c); }, grid, p));
    }
}
BENCHMARK(BM_OracleSolve)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
