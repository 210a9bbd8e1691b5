#pragma once

#include <complex>
#include <span>
#include <vector>

namespace stripmhd {

/// Thomas solve of a real tridiagonal system with complex right-hand side.
/// lower[i] multiplies x[i-1] in row i (lower[0] unused); upper[i] multiplies
/// x[i+1] (upper[n-1] unused). Overwrites rhs with the solution.
void tridiag_solve(std::span<const double> lower, std::span<const double> diag,
                   std::span<const double> upper, std::span<std::complex<double>> rhs);

/// Workspace-carrying variant used in per-mode loops (avoids reallocation).
class TridiagWorkspace {
public:
    void solve(std::span<const double> lower, std::span<const double> diag,
               std::span<const double> upper, std::span<std::complex<double>> rhs);

    /// Solve A x = rhs subject to mean(x) = 0 via a y-constant Lagrange
    /// multiplier: x = x0 - alpha * z with A z = ones, alpha = mean(x0)/mean(z).
    /// Returns alpha (the multiplier, i.e. the y-constant source absorbed).
    std::complex<double> solve_with_zero_mean(std::span<const double> lower,
                                              std::span<const double> diag,
                                              std::span<const double> upper,
                                              std::span<std::complex<double>> rhs);

private:
    std::vector<double> cp_;
    std::vector<std::complex<double>> z_;
};

}  // namespace stripmhd
