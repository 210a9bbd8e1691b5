#include "stripmhd/limit_solver.hpp"

#include <cmath>
#include <sstream>

#include "stripmhd/errors.hpp"

namespace stripmhd {

namespace {
SpectralField cumulative_wall_integral(const SpectralField& w, double tol_scale,
                                       const char* who) {
    // g(., y_j) = int_0^{y_j} w, trapezoid from the wall; returns -g of dx-input
    // at the caller.  Here w is already the integrand.
    const GridSpec& grid = w.grid();
    SpectralField g(grid);
    const double h = grid.dy();
    double worst = 0.0;
    for (int k = 0; k < grid.nx; ++k) {
        const cplx* src = w.col(k);
        cplx* dst = g.col(k);
        cplx acc{0.0, 0.0};
        cplx prev{0.0, 0.0};  // integrand at the wall (field vanishes there)
        for (int j = 0; j < grid.ny; ++j) {
            acc += 0.5 * h * (prev + src[j]);
            dst[j] = acc;
            prev = src[j];
        }
        // value at y = 1 must close to zero (compatibility)
        const cplx top = acc + 0.5 * h * prev;
        worst = std::max(worst, std::abs(top));
    }
    const double tol = tol_scale * std::max(1.0, w.max_abs());
    if (worst > tol) {
        std::ostringstream os;
        os << who << ": compatibility violated, ||v(.,1)|| = " << worst << " > " << tol;
        throw ValidationError(os.str());
    }
    return g;
}
}  // namespace

SpectralField recover_v(const SpectralField& u, double tol_scale) {
    SpectralField w = u.dx();
    SpectralField g = cumulative_wall_integral(w, tol_scale, "recover_v");
    g *= -1.0;
    return g;
}

SpectralField recover_c(const SpectralField& b, double tol_scale) {
    SpectralField w = b.dx();
    SpectralField g = cumulative_wall_integral(w, tol_scale, "recover_c");
    g *= -1.0;
    return g;
}

WallTraces dy_wall_traces(const SpectralField& f) {
    const GridSpec& grid = f.grid();
    if (grid.ny < 4) throw ValidationError("dy_wall_traces: ny >= 4 required");
    WallTraces tr;
    tr.lower.resize(grid.nx);
    tr.upper.resize(grid.nx);
    const double inv2h = 1.0 / (2.0 * grid.dy());
    const int n = grid.ny;
    for (int k = 0; k < grid.nx; ++k) {
        const cplx* c = f.col(k);
        tr.lower[k] = (4.0 * c[0] - c[1]) * inv2h;            // f(0) = 0
        tr.upper[k] = (c[n - 2] - 4.0 * c[n - 1]) * inv2h;    // f(1) = 0
    }
    return tr;
}

std::vector<cplx> pressure_gradient(FftEngine& fft, const SpectralField& u,
                                    const SpectralField& b) {
    if (!(u.grid() == b.grid())) throw UsageError("pressure_gradient: grid mismatch");
    const GridSpec& grid = u.grid();
    WallTraces tr = dy_wall_traces(u);

    SpectralField u2 = fft.multiply_dealiased(u, u);
    SpectralField b2 = fft.multiply_dealiased(b, b);

    std::vector<cplx> dxp(grid.nx, cplx{0.0, 0.0});
    const double h = grid.dy();
    for (int k = 0; k < grid.nx; ++k) {
        if (k == 0) continue;  // gradient has no mean slot
        cplx su{0.0, 0.0}, sb{0.0, 0.0};
        const cplx* cu = u2.col(k);
        const cplx* cb = b2.col(k);
        for (int j = 0; j < grid.ny; ++j) {
            su += cu[j];
            sb += cb[j];
        }
        const cplx ik{0.0, grid.wavenumber(k)};
        dxp[k] = (tr.upper[k] - tr.lower[k]) - ik * (h * su) + ik * (h * sb);
    }
    return dxp;
}

// ------------------------------------------------------------- LimitStepper

LimitStepper::LimitStepper(const GridSpec& grid, const DyadicPartition& part,
                           StepperOptions opt)
    : grid_(grid), part_(part), opt_(std::move(opt)), fft_(grid) {}

void LimitStepper::reset_history() { have_history_ = false; }

double LimitStepper::dt_bound(const MhdState& state) const {
    const double h = grid_.dy();
    // ||u||_inf <= max_j sum_k |u^hat(k, j)|
    double uinf = 0.0;
    for (int j = 0; j < grid_.ny; ++j) {
        double s = 0.0;
        for (int k = 0; k < grid_.nx; ++k) s += std::abs(state.u.at(k, j));
        uinf = std::max(uinf, s);
    }
    return std::min(0.25 * h * h, 1.0 / (grid_.k_max() * uinf + 1.0));
}

double LimitStepper::rate_now(const MhdState& state) const {
    switch (opt_.weight_mode) {
        case WeightMode::dynamic: return theta_rate(part_, state.u, state.b);
        case WeightMode::prescribed: return opt_.prescribed_rate(state.time);
        case WeightMode::off: return 0.0;
    }
    return 0.0;
}

std::pair<SpectralField, SpectralField> LimitStepper::nonlinear_terms(const MhdState& state,
                                                                      double radius) {
    SpectralField nu(grid_), nb(grid_);
    if (!opt_.nonlinear) {
        if (opt_.forcing) opt_.forcing(state.time, nu, nb);
        return {std::move(nu), std::move(nb)};
    }
    SpectralField u = apply_weight(state.u, radius, -1);
    SpectralField b = apply_weight(state.b, radius, -1);
    SpectralField v = recover_v(u, 1e-8);
    SpectralField c = recover_c(b, 1e-8);

    PhysField pu = fft_.to_physical_padded(u);
    PhysField pv = fft_.to_physical_padded(v);
    PhysField pux = fft_.to_physical_padded(u.dx());
    PhysField puy = fft_.to_physical_padded(u.dy_centered());
    PhysField pb = fft_.to_physical_padded(b);
    PhysField pc = fft_.to_physical_padded(c);
    PhysField pbx = fft_.to_physical_padded(b.dx());
    PhysField pby = fft_.to_physical_padded(b.dy_centered());

    PhysField ru(pu.mx, pu.ny), rb(pu.mx, pu.ny);
    const size_t n = pu.v.size();
    if (opt_.magnetic) {
        for (size_t i = 0; i < n; ++i) {
            ru.v[i] = -(pu.v[i] * pux.v[i] + pv.v[i] * puy.v[i]) +
                      (pb.v[i] * pbx.v[i] + pc.v[i] * pby.v[i]);
            rb.v[i] = -(pu.v[i] * pbx.v[i] + pv.v[i] * pby.v[i]) +
                      (pb.v[i] * pux.v[i] + pc.v[i] * puy.v[i]);
        }
    } else {
        for (size_t i = 0; i < n; ++i) {
            ru.v[i] = -(pu.v[i] * pux.v[i] + pv.v[i] * puy.v[i]);
            rb.v[i] = -(pu.v[i] * pbx.v[i] + pv.v[i] * pby.v[i]);
        }
    }
    nu = fft_.to_spectral_truncated(ru);
    nb = fft_.to_spectral_truncated(rb);
    apply_weight_inplace(nu, radius, +1);
    apply_weight_inplace(nb, radius, +1);
    nu.enforce_hermitian();
    nb.enforce_hermitian();
    nu.zero_x_mean();
    nb.zero_x_mean();
    if (opt_.forcing) opt_.forcing(state.time, nu, nb);
    return {std::move(nu), std::move(nb)};
}

void LimitStepper::step(MhdState& state, AnalyticityState& an, double dt) {
    if (state.flavor != Flavor::limit) throw UsageError("LimitStepper: wrong flavor");
    if (!an.healthy) throw RadiusExhausted();
    if (!(dt > 0.0)) throw ValidationError("step: dt must be positive");

    const bool weighted = opt_.weight_mode != WeightMode::off;
    const double radius = weighted ? an.radius() : 0.0;
    rate_n_ = rate_now(state);
    if (opt_.weight_mode == WeightMode::prescribed)
        rate_mid_ = opt_.prescribed_rate(state.time + 0.5 * dt);
    else
        rate_mid_ = have_history_ ? 1.5 * rate_n_ - 0.5 * rate_prev_ : rate_n_;
    rate_mid_ = std::max(0.0, rate_mid_);

    auto [nu, nb] = nonlinear_terms(state, radius);
    SpectralField rhs_u = have_history_ ? 1.5 * nu - 0.5 * nu_prev_ : nu;
    SpectralField rhs_b = have_history_ ? 1.5 * nb - 0.5 * nb_prev_ : nb;

    const double h = grid_.dy();
    const int n = grid_.ny;
    const double r = dt / (2.0 * h * h);
    std::vector<double> lo(n), di(n), up(n);
    std::vector<cplx> rhs(n);

    for (int k = 1; k < grid_.nx; ++k) {
        const double damp = weighted ? an.lambda * rate_mid_ * grid_.abs_wavenumber(k) : 0.0;
        const double dhalf = 0.5 * dt * damp;
        for (int j = 0; j < n; ++j) {
            lo[j] = -r;
            up[j] = -r;
            di[j] = 1.0 + dhalf + 2.0 * r;
        }
        // explicit half: ((1 - dhalf) I + dt/2 L) u^n + dt rhs
        auto assemble = [&](const SpectralField& f, const SpectralField& nl) {
            const cplx* c = f.col(k);
            const cplx* s = nl.col(k);
            for (int j = 0; j < n; ++j) {
                const cplx up_v = (j + 1 < n) ? c[j + 1] : cplx{0.0, 0.0};
                const cplx dn_v = (j > 0) ? c[j - 1] : cplx{0.0, 0.0};
                rhs[j] = (1.0 - dhalf - 2.0 * r) * c[j] + r * (up_v + dn_v) + dt * s[j];
            }
        };

        assemble(state.u, rhs_u);
        if (opt_.nonlinear) {
            // the y-constant multiplier is the discrete pressure gradient;
            // the interior quadrature of the constant (ny * dy = 1 - dy)
            // normalizes it against the unit-strip integral
            const cplx alpha = ws_.solve_with_zero_mean(lo, di, up, rhs);
            const cplx ik{0.0, grid_.wavenumber(k)};
            state.p_row[k] = alpha * (n * h) / (dt * ik);
        } else {
            ws_.solve(lo, di, up, rhs);
        }
        for (int j = 0; j < n; ++j) state.u.at(k, j) = rhs[j];

        assemble(state.b, rhs_b);
        if (opt_.nonlinear)
            ws_.solve_with_zero_mean(lo, di, up, rhs);
        else
            ws_.solve(lo, di, up, rhs);
        for (int j = 0; j < n; ++j) state.b.at(k, j) = rhs[j];
    }
    state.u.zero_x_mean();
    state.b.zero_x_mean();
    state.u.enforce_hermitian();
    state.b.enforce_hermitian();
    state.p_row[0] = cplx{0.0, 0.0};

    if (opt_.nonlinear) {
        state.v = recover_v(state.u, 1e-8);
        state.c = recover_c(state.b, 1e-8);
    }
    state.time += dt;

    nu_prev_ = std::move(nu);
    nb_prev_ = std::move(nb);
    rate_prev_ = rate_n_;
    have_history_ = true;

    if (weighted) {
        advance_radius(an, rate_mid_, dt);
        if (!an.healthy) throw RadiusExhausted();
    }
    if (!state.all_finite()) throw DivergedState(state.time);
}

}  // namespace stripmhd
