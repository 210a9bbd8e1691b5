#include <benchmark/benchmark.h>

#include <random>

#include "stripmhd/fft.hpp"

using namespace stripmhd;

namespace {
SpectralField random_field(const GridSpec& grid, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralField f(grid);
    for (int k = 0; k < grid.nx; ++k)
        for (int j = 0; j < grid.ny; ++j) f.at(k, j) = cplx{gauss(rng), gauss(rng)};
    f.enforce_hermitian();
    f.zero_x_mean();
    return f;
}
}  // namespace

static void BM_DealiasedProduct(benchmark::State& state) {
    GridSpec grid(2.0 * M_PI, static_cast<int>(state.range(0)),
                  static_cast<int>(state.range(1)));
    FftEngine fft(grid);
    SpectralField f = random_field(grid, 1);
    SpectralField g = random_field(grid, 2);
    for (auto _ : state) {
        SpectralField p = fft.multiply_dealiased(f, g);
        benchmark::DoNotOptimize(p.data().data());
    }
    state.SetItemsProcessed(state.iterations() * grid.nx * grid.ny);
}
BENCHMARK(BM_DealiasedProduct)->Args({64, 32})->Args({128, 64})->Args({256, 64});

static void BM_PhysicalRoundTrip(benchmark::State& state) {
    GridSpec grid(2.0 * M_PI, static_cast<int>(state.range(0)),
                  static_cast<int>(state.range(1)));
    FftEngine fft(grid);
    SpectralField f = random_field(grid, 3);
    for (auto _ : state) {
        PhysField p = fft.to_physical_padded(f);
        SpectralField back = fft.to_spectral_truncated(p);
        benchmark::DoNotOptimize(back.data().data());
    }
}
BENCHMARK(BM_PhysicalRoundTrip)->Args({128, 64})->Args({256, 64});
