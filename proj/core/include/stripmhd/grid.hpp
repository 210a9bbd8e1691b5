#pragma once

#include <vector>

namespace stripmhd {

/// Discretization of the strip: periodic in x (period L), wall-bounded in y.
/// Interior wall-normal nodes y_j = (j+1)*dy, j = 0..ny-1, dy = 1/(ny+1);
/// field values at the walls y = 0 and y = 1 are implicit zeros.
struct GridSpec {
    double period_L = 0.0;
    int nx = 0;  // horizontal collocation points, power of two, >= 16
    int ny = 0;  // interior wall-normal nodes

    GridSpec() = default;
    GridSpec(double L, int nx_, int ny_);

    double dy() const { return 1.0 / (ny + 1); }
    double y(int j) const { return (j + 1) * dy(); }
    const std::vector<double>& y_nodes() const { return y_nodes_; }

    /// Signed wavenumber of FFT slot kidx, in {-nx/2+1, ..., nx/2} * (2pi/L).
    double wavenumber(int kidx) const {
        int m = (kidx <= nx / 2) ? kidx : kidx - nx;
        return 2.0 * 3.14159265358979323846 * m / period_L;
    }
    double abs_wavenumber(int kidx) const {
        double k = wavenumber(kidx);
        return k < 0 ? -k : k;
    }
    double k_min_nonzero() const { return 2.0 * 3.14159265358979323846 / period_L; }
    double k_max() const { return 3.14159265358979323846 * nx / period_L; }

    bool operator==(const GridSpec& o) const {
        return period_L == o.period_L && nx == o.nx && ny == o.ny;
    }

private:
    std::vector<double> y_nodes_;
};

}  // namespace stripmhd
