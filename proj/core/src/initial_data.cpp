#include "stripmhd/initial_data.hpp"

#include <cmath>

#include "stripmhd/errors.hpp"
#include "stripmhd/limit_solver.hpp"

namespace stripmhd {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Adds amp * trig(m * 2pi x / L) * sin(2 pi n y) to f; trig is cos (phase 0)
// or sin (phase 1).
void add_mode(SpectralField& f, int m, int n, double amp, int phase) {
    const GridSpec& g = f.grid();
    const int kpos = m, kneg = g.nx - m;
    for (int j = 0; j < g.ny; ++j) {
        const double prof = std::sin(2.0 * kPi * n * g.y(j));
        const cplx cpos = (phase == 0) ? cplx{0.5 * amp * prof, 0.0}
                                       : cplx{0.0, -0.5 * amp * prof};
        f.at(kpos, j) += cpos;
        f.at(kneg, j) += std::conj(cpos);
    }
}

// Adds a zero-mean periodized Gaussian bump centered at x0 with width sigma,
// y-profile sin(2 pi y). Coefficients from the closed-form transform of the
// periodization (wrap-around terms are negligible for sigma << L).
void add_packet(SpectralField& f, double x0, double sigma, double amp) {
    const GridSpec& g = f.grid();
    for (int k = 1; k < g.nx; ++k) {
        if (k == g.nx / 2) continue;  // keep fields Nyquist-free
        const double kk = g.wavenumber(k);
        const double mag = amp * sigma * std::sqrt(2.0 * kPi) / g.period_L *
                           std::exp(-0.5 * sigma * sigma * kk * kk);
        const cplx coef = mag * std::exp(cplx{0.0, -kk * x0});
        for (int j = 0; j < g.ny; ++j)
            f.at(k, j) += coef * std::sin(2.0 * kPi * g.y(j));
    }
}
}  // namespace

InitialData make_profile(const GridSpec& grid, const std::string& profile, double delta) {
    InitialData d{SpectralField(grid), SpectralField(grid)};
    if (profile == "zero") return d;
    if (profile == "mode1") {
        add_mode(d.u0, 1, 1, delta, 0);
        add_mode(d.b0, 1, 1, delta, 1);
        return d;
    }
    if (profile == "mode2") {
        add_mode(d.u0, 1, 1, delta, 0);
        add_mode(d.u0, 2, 2, 0.5 * delta, 0);
        add_mode(d.b0, 1, 1, delta, 1);
        add_mode(d.b0, 2, 2, 0.5 * delta, 1);
        return d;
    }
    if (profile == "packet") {
        const double L = grid.period_L;
        add_packet(d.u0, 0.5 * L, 0.08 * L, delta);
        add_packet(d.b0, 0.25 * L, 0.08 * L, 0.5 * delta);
        return d;
    }
    throw ConfigError("unknown data.profile: " + profile);
}

PreparedState make_initial_state(const GridSpec& grid, const DyadicPartition& part,
                                 Flavor flavor, const std::string& profile, double delta,
                                 double eps, double a, double c1) {
    InitialData d = make_profile(grid, profile, delta);
    PreparedState out{MhdState(grid, flavor)};
    MhdState& st = out.state;
    st.u = apply_weight(d.u0, a, +1);
    st.b = apply_weight(d.b0, a, +1);
    st.v = recover_v(st.u, 1e-8);
    st.c = recover_c(st.b, 1e-8);

    const double epsv = (flavor == Flavor::scaled) ? eps : 0.0;
    out.smallness = besov_norm(part, st.u, 0.5) + epsv * besov_norm(part, st.v, 0.5) +
                    besov_norm(part, st.b, 0.5) + epsv * besov_norm(part, st.c, 0.5);
    out.within_theory = out.smallness <= c1 * a;
    return out;
}

}  // namespace stripmhd
