#include "stripmhd/state.hpp"

#include <cmath>

#include "stripmhd/errors.hpp"

namespace stripmhd {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::limit: return "limit";
        case Flavor::scaled: return "scaled";
        case Flavor::difference: return "difference";
    }
    return "?";
}

Flavor flavor_from_name(const std::string& s) {
    if (s == "limit") return Flavor::limit;
    if (s == "scaled") return Flavor::scaled;
    if (s == "difference") return Flavor::difference;
    throw ConfigError("unknown flavor: " + s);
}

MhdState::MhdState(const GridSpec& grid, Flavor fl)
    : flavor(fl), u(grid), v(grid), b(grid), c(grid) {
    if (fl == Flavor::limit)
        p_row.assign(grid.nx, cplx{0.0, 0.0});
    else
        p_faces.assign(static_cast<size_t>(grid.nx) * (grid.ny + 1), cplx{0.0, 0.0});
}

bool MhdState::all_finite() const {
    auto vec_ok = [](const std::vector<cplx>& v) {
        for (const cplx& z : v)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    };
    return u.all_finite() && v.all_finite() && b.all_finite() && c.all_finite() &&
           vec_ok(p_row) && vec_ok(p_faces);
}

double divergence_residual(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid())) throw UsageError("divergence_residual: grid mismatch");
    const int nx = f.nx(), n = f.ny();
    const double h = f.grid().dy();
    double m = 0.0;
    for (int k = 0; k < nx; ++k) {
        const cplx ik{0.0, f.grid().wavenumber(k)};
        const cplx* fc = f.col(k);
        const cplx* gc = g.col(k);
        for (int j = 0; j <= n; ++j) {
            const cplx f_lo = (j > 0) ? fc[j - 1] : cplx{0.0, 0.0};
            const cplx f_hi = (j < n) ? fc[j] : cplx{0.0, 0.0};
            const cplx g_lo = (j > 0) ? gc[j - 1] : cplx{0.0, 0.0};
            const cplx g_hi = (j < n) ? gc[j] : cplx{0.0, 0.0};
            const cplx r = ik * 0.5 * (f_lo + f_hi) + (g_hi - g_lo) / h;
            m = std::max(m, std::abs(r));
        }
    }
    return m;
}

double vertical_mean_residual(const SpectralField& f) {
    double m = 0.0;
    for (int k = 0; k < f.nx(); ++k) {
        cplx s{0.0, 0.0};
        const cplx* c = f.col(k);
        for (int j = 0; j < f.ny(); ++j) s += c[j];
        m = std::max(m, std::abs(s) * f.grid().dy());
    }
    return m;
}

}  // namespace stripmhd
