#include "stripmhd/tridiag.hpp"

#include <cassert>

namespace stripmhd {

namespace {
void thomas(std::span<const double> lower, std::span<const double> diag,
            std::span<const double> upper, std::span<std::complex<double>> rhs,
            std::vector<double>& cp) {
    const size_t n = diag.size();
    assert(lower.size() == n && upper.size() == n && rhs.size() == n && n > 0);
    cp.resize(n);
    double piv = diag[0];
    cp[0] = upper[0] / piv;
    rhs[0] /= piv;
    for (size_t i = 1; i < n; ++i) {
        piv = diag[i] - lower[i] * cp[i - 1];
        cp[i] = upper[i] / piv;
        rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / piv;
    }
    for (size_t i = n - 1; i-- > 0;) rhs[i] -= cp[i] * rhs[i + 1];
}
}  // namespace

void tridiag_solve(std::span<const double> lower, std::span<const double> diag,
                   std::span<const double> upper, std::span<std::complex<double>> rhs) {
    std::vector<double> cp;
    thomas(lower, diag, upper, rhs, cp);
}

void TridiagWorkspace::solve(std::span<const double> lower, std::span<const double> diag,
                             std::span<const double> upper,
                             std::span<std::complex<double>> rhs) {
    thomas(lower, diag, upper, rhs, cp_);
}

std::complex<double> TridiagWorkspace::solve_with_zero_mean(
    std::span<const double> lower, std::span<const double> diag,
    std::span<const double> upper, std::span<std::complex<double>> rhs) {
    const size_t n = diag.size();
    z_.assign(n, std::complex<double>{1.0, 0.0});
    thomas(lower, diag, upper, rhs, cp_);
    thomas(lower, diag, upper, std::span<std::complex<double>>(z_), cp_);
    std::complex<double> sx{0.0, 0.0}, sz{0.0, 0.0};
    for (size_t i = 0; i < n; ++i) {
        sx += rhs[i];
        sz += z_[i];
    }
    const std::complex<double> alpha = sx / sz;
    for (size_t i = 0; i < n; ++i) rhs[i] -= alpha * z_[i];
    return alpha;
}

}  // namespace stripmhd
