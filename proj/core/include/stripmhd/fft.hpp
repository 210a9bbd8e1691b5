#pragma once

#include <memory>
#include <vector>

#include "stripmhd/spectral_field.hpp"

namespace stripmhd {

/// Physical-space samples on the 3/2 de-aliasing grid: mx = 3*nx/2 points in
/// x per wall-normal level, layout [kx-major like the spectral side]:
/// value (i, j) at [i*ny + j].
struct PhysField {
    int mx = 0;
    int ny = 0;
    std::vector<double> v;

    PhysField() = default;
    PhysField(int mx_, int ny_) : mx(mx_), ny(ny_), v(static_cast<size_t>(mx_) * ny_, 0.0) {}
    double& at(int i, int j) { return v[static_cast<size_t>(i) * ny + j]; }
    double at(int i, int j) const { return v[static_cast<size_t>(i) * ny + j]; }
};

/// FFT transforms for one grid. Owns FFTW plans and scratch; one instance
/// per run owner (plan creation is globally serialized, execution is not).
class FftEngine {
public:
    explicit FftEngine(const GridSpec& grid);
    ~FftEngine();
    FftEngine(const FftEngine&) = delete;
    FftEngine& operator=(const FftEngine&) = delete;

    const GridSpec& grid() const { return grid_; }
    int padded_nx() const;

    /// Spectrum -> physical samples on the padded grid (real part; a real
    /// input field keeps imaginary residue at roundoff).
    PhysField to_physical_padded(const SpectralField& f);

    /// Physical samples on the padded grid -> truncated spectrum on the grid.
    /// The Nyquist column is zeroed (fields are treated as Nyquist-free).
    SpectralField to_spectral_truncated(const PhysField& p);

    /// Physical samples on the unpadded grid (nx points), for norm evaluation.
    std::vector<double> to_physical_unpadded(const SpectralField& f);

    /// De-aliased pointwise product via the 3/2 rule. Bilinear in (f, g).
    SpectralField multiply_dealiased(const SpectralField& f, const SpectralField& g);

private:
    struct Impl;
    GridSpec grid_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace stripmhd
