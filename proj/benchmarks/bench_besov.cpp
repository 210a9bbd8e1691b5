#include <benchmark/benchmark.h>

#include <random>

#include "stripmhd/besov.hpp"

using namespace stripmhd;

namespace {
SpectralField random_field(const GridSpec& grid, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralField f(grid);
    for (int k = 1; k < grid.nx; ++k)
        for (int j = 0; j < grid.ny; ++j) f.at(k, j) = cplx{gauss(rng), gauss(rng)};
    f.enforce_hermitian();
    return f;
}
}  // namespace

static void BM_BesovHalf(benchmark::State& state) {
    GridSpec grid(2.0 * M_PI, static_cast<int>(state.range(0)),
                  static_cast<int>(state.range(1)));
    DyadicPartition part(grid);
    SpectralField f = random_field(grid, 5);
    for (auto _ : state) benchmark::DoNotOptimize(besov_norm(part, f, 0.5));
}
BENCHMARK(BM_BesovHalf)->Args({64, 32})->Args({128, 64})->Args({256, 64});

static void BM_DyadicDecompose(benchmark::State& state) {
    GridSpec grid(2.0 * M_PI, static_cast<int>(state.range(0)),
                  static_cast<int>(state.range(1)));
    DyadicPartition part(grid);
    SpectralField f = random_field(grid, 7);
    for (auto _ : state) {
        DyadicLadder lad = dyadic_decompose(part, f);
        benchmark::DoNotOptimize(lad.blocks.data());
    }
}
BENCHMARK(BM_DyadicDecompose)->Args({128, 64});
