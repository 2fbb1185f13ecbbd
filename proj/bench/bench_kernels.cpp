// Serial reference lane vs OpenMP lane for the batch kernels, plus the cost
// of a single quantity evaluation as the dimension grows.

#include <benchmark/benchmark.h>

#include "skewlab/verify.hpp"

using namespace skewlab;

namespace {

SweepConfig sweep_config(int steps) {
    SweepConfig cfg;
    cfg.family = Family::Werner;
    cfg.steps = steps;
    cfg.alpha = 0.55;
    cfg.beta = 0.4;
    return cfg;
}

void BM_sweep_serial(benchmark::State& state) {
    const SweepConfig cfg = sweep_config(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_sweep(cfg, Exec::Serial));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sweep_parallel(benchmark::State& state) {
    const SweepConfig cfg = sweep_config(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_sweep(cfg, Exec::Parallel));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_grid_serial(benchmark::State& state) {
    GridConfig cfg;
    cfg.family = Family::Isotropic;
    cfg.param = 0.7;
    cfg.alpha_steps = static_cast<int>(state.range(0));
    cfg.beta_steps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_grid(cfg, Exec::Serial));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_grid_parallel(benchmark::State& state) {
    GridConfig cfg;
    cfg.family = Family::Isotropic;
    cfg.param = 0.7;
    cfg.alpha_steps = static_cast<int>(state.range(0));
    cfg.beta_steps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_grid(cfg, Exec::Parallel));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

VerifyConfig verify_config(int samples) {
    VerifyConfig cfg;
    cfg.dims = {2, 3, 4};
    cfg.samples = samples;
    cfg.seed = 1;
    return cfg;
}

void BM_verify_serial(benchmark::State& state) {
    const VerifyConfig cfg = verify_config(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_verify(cfg, Exec::Serial));
    state.SetItemsProcessed(state.iterations() * 3 * state.range(0));
}

void BM_verify_parallel(benchmark::State& state) {
    const VerifyConfig cfg = verify_config(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_verify(cfg, Exec::Parallel));
    state.SetItemsProcessed(state.iterations() * 3 * state.range(0));
}

void BM_uncertainty_product(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const DensityOperator rho = random_density(d, d, 7);
    const HSOperator a = random_operator(d, 8);
    const SkewParams params(0.55, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(u_quantity(rho, a, params).real());
}

void BM_spectral_sum(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const DensityOperator rho = random_density(d, d, 7);
    const HSOperator a = random_operator(d, 8);
    const SkewParams params(0.55, 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(mgwyd_i(rho, a, params, EvalPath::SpectralSum).real());
}

} // namespace

BENCHMARK(BM_sweep_serial)->Arg(101)->Arg(404)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(101)->Arg(404)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid_serial)->Arg(21)->Arg(51)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid_parallel)->Arg(21)->Arg(51)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_serial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_parallel)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_uncertainty_product)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_spectral_sum)->Arg(4)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
