#pragma once

#include <complex>
#include <vector>

#include "stripmhd/grid.hpp"

namespace stripmhd {

using cplx = std::complex<double>;

/// Complex horizontal-Fourier coefficients per wall-normal level.
/// Storage is k-major: coefficient (kidx, j) sits at [kidx*ny + j], so each
/// wall-normal column is contiguous (tridiagonal solves run per column).
/// Convention: f(x, y_j) = sum_k coeff(k, j) e^{i k x}, k = wavenumber(kidx).
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(const GridSpec& grid)
        : grid_(grid), a_(static_cast<size_t>(grid.nx) * grid.ny, cplx{0.0, 0.0}) {}

    const GridSpec& grid() const { return grid_; }
    int nx() const { return grid_.nx; }
    int ny() const { return grid_.ny; }

    cplx& at(int kidx, int j) { return a_[static_cast<size_t>(kidx) * grid_.ny + j]; }
    const cplx& at(int kidx, int j) const { return a_[static_cast<size_t>(kidx) * grid_.ny + j]; }
    cplx* col(int kidx) { return a_.data() + static_cast<size_t>(kidx) * grid_.ny; }
    const cplx* col(int kidx) const { return a_.data() + static_cast<size_t>(kidx) * grid_.ny; }

    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

    void set_zero() { a_.assign(a_.size(), cplx{0.0, 0.0}); }

    /// Projects onto exact Hermitian symmetry coeff(-k,j) = conj(coeff(k,j)).
    void enforce_hermitian();
    bool is_hermitian(double rel_tol = 1e-12) const;

    /// Kill the horizontal mean (k = 0 column).
    void zero_x_mean();
    double x_mean_abs_max() const;

    /// L2(S)^2 of one wall-normal column: L * dy * sum_j |c_j|^2 (trapezoid
    /// with zero wall values).
    double col_l2sq(int kidx) const;

    /// Same quadratic form for the wall-normal derivative, evaluated on the
    /// staggered first differences including both wall strips. This is the
    /// exact summation-by-parts partner of the 3-point Dirichlet Laplacian.
    double col_dy_l2sq(int kidx) const;

    /// Per-column L2(S)^2, for all k at once.
    std::vector<double> col_energies() const;
    std::vector<double> col_dy_energies() const;

    double l2_norm() const;
    double max_abs() const;
    bool all_finite() const;

    // Linear ops.
    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    /// Spectral d/dx: multiplies column k by i*k.
    SpectralField dx() const;
    /// Centered second-order d/dy at nodes, implicit zero wall values.
    SpectralField dy_centered() const;

private:
    GridSpec grid_;
    std::vector<cplx> a_;
};

/// L2(S) inner product Re<f, g> with the field quadrature.
double inner_l2(const SpectralField& f, const SpectralField& g);

}  // namespace stripmhd
