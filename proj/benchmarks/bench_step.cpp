#include <benchmark/benchmark.h>

#include "stripmhd/initial_data.hpp"
#include "stripmhd/scaled_solver.hpp"

using namespace stripmhd;

static void BM_LimitStep(benchmark::State& state) {
    GridSpec grid(2.0 * M_PI, static_cast<int>(state.range(0)),
                  static_cast<int>(state.range(1)));
    DyadicPartition part(grid);
    StepperOptions opt;
    LimitStepper stepper(grid, part, opt);
    PreparedState prep =
        make_initial_state(grid, part, Flavor::limit, "mode1", 1e-3, 0.0, 0.2, 0.05);
    MhdState st = prep.state;
    AnalyticityState an(0.2, 64.0);
    const double dt = 0.1 * stepper.dt_bound(st);
    for (auto _ : state) {
        stepper.step(st, an, dt);
        benchmark::DoNotOptimize(st.u.data().data());
    }
}
BENCHMARK(BM_LimitStep)->Args({64, 32})->Args({128, 64});

static void BM_ScaledStep(benchmark::State& state) {
    GridSpec grid(2.0 * M_PI, static_cast<int>(state.range(0)),
                  static_cast<int>(state.range(1)));
    DyadicPartition part(grid);
    ScaledOptions opt;
    opt.eps = 0.1;
    ScaledStepper stepper(grid, part, opt);
    PreparedState prep =
        make_initial_state(grid, part, Flavor::scaled, "mode1", 1e-3, opt.eps, 0.2, 0.05);
    MhdState st = prep.state;
    AnalyticityState an(0.2, 64.0);
    const double dt = 0.1 * stepper.dt_bound(st);
    for (auto _ : state) {
        stepper.step(st, an, dt);
        benchmark::DoNotOptimize(st.u.data().data());
    }
}
BENCHMARK(BM_ScaledStep)->Args({64, 32})->Args({128, 64});

BENCHMARK_MAIN();
