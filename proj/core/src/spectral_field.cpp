#include "stripmhd/spectral_field.hpp"

#include <cmath>

#include "stripmhd/errors.hpp"

namespace stripmhd {

void SpectralField::enforce_hermitian() {
    const int n = grid_.nx;
    for (int k = 1; k < n / 2; ++k) {
        cplx* p = col(k);
        cplx* m = col(n - k);
        for (int j = 0; j < grid_.ny; ++j) {
            cplx avg = 0.5 * (p[j] + std::conj(m[j]));
            p[j] = avg;
            m[j] = std::conj(avg);
        }
    }
    cplx* z = col(0);
    cplx* nyq = col(n / 2);
    for (int j = 0; j < grid_.ny; ++j) {
        z[j] = cplx{z[j].real(), 0.0};
        nyq[j] = cplx{nyq[j].real(), 0.0};
    }
}

bool SpectralField::is_hermitian(double rel_tol) const {
    const int n = grid_.nx;
    double scale = max_abs();
    if (scale == 0.0) return true;
    for (int k = 1; k < n / 2; ++k) {
        const cplx* p = col(k);
        const cplx* m = col(n - k);
        for (int j = 0; j < grid_.ny; ++j)
            if (std::abs(p[j] - std::conj(m[j])) > rel_tol * scale) return false;
    }
    for (int j = 0; j < grid_.ny; ++j) {
        if (std::abs(at(0, j).imag()) > rel_tol * scale) return false;
        if (std::abs(at(n / 2, j).imag()) > rel_tol * scale) return false;
    }
    return true;
}

void SpectralField::zero_x_mean() {
    cplx* z = col(0);
    for (int j = 0; j < grid_.ny; ++j) z[j] = cplx{0.0, 0.0};
}

double SpectralField::x_mean_abs_max() const {
    double m = 0.0;
    const cplx* z = col(0);
    for (int j = 0; j < grid_.ny; ++j) m = std::max(m, std::abs(z[j]));
    return m;
}

double SpectralField::col_l2sq(int kidx) const {
    const cplx* c = col(kidx);
    double s = 0.0;
    for (int j = 0; j < grid_.ny; ++j) s += std::norm(c[j]);
    return grid_.period_L * grid_.dy() * s;
}

double SpectralField::col_dy_l2sq(int kidx) const {
    const cplx* c = col(kidx);
    const double h = grid_.dy();
    const int n = grid_.ny;
    // staggered differences (c_{j+1}-c_j)/h for j = 0..n with zero walls
    double s = std::norm(c[0]);  // (c_1 - 0)/h strip
    for (int j = 0; j + 1 < n; ++j) s += std::norm(c[j + 1] - c[j]);
    s += std::norm(c[n - 1]);  // (0 - c_n)/h strip
    return grid_.period_L * s / h;
}

std::vector<double> SpectralField::col_energies() const {
    std::vector<double> e(grid_.nx);
    for (int k = 0; k < grid_.nx; ++k) e[k] = col_l2sq(k);
    return e;
}

std::vector<double> SpectralField::col_dy_energies() const {
    std::vector<double> e(grid_.nx);
    for (int k = 0; k < grid_.nx; ++k) e[k] = col_dy_l2sq(k);
    return e;
}

double SpectralField::l2_norm() const {
    double s = 0.0;
    for (int k = 0; k < grid_.nx; ++k) s += col_l2sq(k);
    return std::sqrt(s);
}

double SpectralField::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool SpectralField::all_finite() const {
    for (const cplx& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    if (!(grid_ == o.grid_)) throw UsageError("SpectralField: grid mismatch in +=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    if (!(grid_ == o.grid_)) throw UsageError("SpectralField: grid mismatch in -=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (cplx& v : a_) v *= s;
    return *this;
}

SpectralField SpectralField::dx() const {
    SpectralField g(grid_);
    for (int k = 0; k < grid_.nx; ++k) {
        const cplx ik{0.0, grid_.wavenumber(k)};
        const cplx* src = col(k);
        cplx* dst = g.col(k);
        for (int j = 0; j < grid_.ny; ++j) dst[j] = ik * src[j];
    }
    return g;
}

SpectralField SpectralField::dy_centered() const {
    SpectralField g(grid_);
    const double inv2h = 1.0 / (2.0 * grid_.dy());
    const int n = grid_.ny;
    for (int k = 0; k < grid_.nx; ++k) {
        const cplx* src = col(k);
        cplx* dst = g.col(k);
        for (int j = 0; j < n; ++j) {
            const cplx up = (j + 1 < n) ? src[j + 1] : cplx{0.0, 0.0};
            const cplx dn = (j > 0) ? src[j - 1] : cplx{0.0, 0.0};
            dst[j] = (up - dn) * inv2h;
        }
    }
    return g;
}

double inner_l2(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid())) throw UsageError("inner_l2: grid mismatch");
    double s = 0.0;
    const int nx = f.nx(), ny = f.ny();
    for (int k = 0; k < nx; ++k) {
        const cplx* a = f.col(k);
        const cplx* b = g.col(k);
        double sk = 0.0;
        for (int j = 0; j < ny; ++j)
            sk += a[j].real() * b[j].real() + a[j].imag() * b[j].imag();
        s += sk;
    }
    return f.grid().period_L * f.grid().dy() * s;
}

}  // namespace stripmhd
