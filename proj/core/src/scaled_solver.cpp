#include "stripmhd/scaled_solver.hpp"

#include <cmath>

#include "stripmhd/errors.hpp"

namespace stripmhd {

PressurePoisson::PressurePoisson(const GridSpec& grid, double eps)
    : grid_(grid), eps_(eps) {
    if (!(eps > 0.0)) throw ValidationError("PressurePoisson: eps must be positive");
}

std::vector<cplx> PressurePoisson::solve(const SpectralField& g_u, const SpectralField& g_v,
                                         const std::vector<cplx>* gv_wall0,
                                         const std::vector<cplx>* gv_wall1) {
    const int nx = grid_.nx, n = grid_.ny, nf = n + 1;
    const double h = grid_.dy();
    const double ie2h2 = 1.0 / (eps_ * eps_ * h * h);

    std::vector<cplx> p(static_cast<size_t>(nx) * nf, cplx{0.0, 0.0});
    std::vector<double> lo(nf), di(nf), up(nf);
    std::vector<cplx> rhs(nf);

    for (int k = 0; k < nx; ++k) {
        const double kk = grid_.wavenumber(k);
        const cplx ik{0.0, kk};
        const cplx* gu = g_u.col(k);
        const cplx* gv = g_v.col(k);
        const cplx w0 = gv_wall0 ? (*gv_wall0)[k] : cplx{0.0, 0.0};
        const cplx w1 = gv_wall1 ? (*gv_wall1)[k] : cplx{0.0, 0.0};

        // rhs faces: dx g_u + eps^-2 dy g_v with supplied wall traces for g_v
        for (int i = 0; i <= n; ++i) {
            const cplx u_lo = (i > 0) ? gu[i - 1] : cplx{0.0, 0.0};
            const cplx u_hi = (i < n) ? gu[i] : cplx{0.0, 0.0};
            const cplx v_lo = (i > 0) ? gv[i - 1] : w0;
            const cplx v_hi = (i < n) ? gv[i] : w1;
            rhs[i] = ik * 0.5 * (u_lo + u_hi) + (v_hi - v_lo) / (eps_ * eps_ * h);
        }

        const double kq = 0.25 * kk * kk;
        for (int i = 0; i <= n; ++i) {
            lo[i] = -kq + ie2h2;
            up[i] = -kq + ie2h2;
            di[i] = -2.0 * kq - 2.0 * ie2h2;
        }
        di[0] = -kq - ie2h2;
        di[n] = -kq - ie2h2;

        if (k == 0) {
            // Neumann-singular mode: gauge row, then remove the y-mean.
            di[n] = 1.0;
            lo[n] = 0.0;
            rhs[n] = cplx{0.0, 0.0};
        }
        ws_.solve(lo, di, up, rhs);
        if (k == 0) {
            cplx mean{0.0, 0.0};
            for (int i = 0; i <= n; ++i) mean += rhs[i];
            mean /= static_cast<double>(nf);
            for (int i = 0; i <= n; ++i) rhs[i] -= mean;
        }
        for (int i = 0; i <= n; ++i) p[static_cast<size_t>(k) * nf + i] = rhs[i];
    }
    return p;
}

void PressurePoisson::apply_gradient_correction(SpectralField& u, SpectralField& v,
                                                const std::vector<cplx>& p_faces,
                                                double scale) const {
    const int nx = grid_.nx, n = grid_.ny, nf = n + 1;
    const double h = grid_.dy();
    const double ie2h = 1.0 / (eps_ * eps_ * h);
    for (int k = 0; k < nx; ++k) {
        const cplx ik{0.0, grid_.wavenumber(k)};
        const cplx* pf = p_faces.data() + static_cast<size_t>(k) * nf;
        cplx* uc = u.col(k);
        cplx* vc = v.col(k);
        for (int j = 0; j < n; ++j) {
            uc[j] -= scale * ik * 0.5 * (pf[j] + pf[j + 1]);
            vc[j] -= scale * ie2h * (pf[j + 1] - pf[j]);
        }
    }
}

std::vector<cplx> PressurePoisson::project(SpectralField& u, SpectralField& v) {
    // the divergence constraint dx u + dy v = 0 corresponds to the
    // eps^2-scaled v-residual in the solve's convention
    SpectralField gv = v;
    gv *= eps_ * eps_;
    std::vector<cplx> p = solve(u, gv);
    apply_gradient_correction(u, v, p, 1.0);
    return p;
}

SpectralField pressure_faces_to_nodes(const GridSpec& grid, const std::vector<cplx>& p_faces) {
    SpectralField p(grid);
    const int nf = grid.ny + 1;
    for (int k = 0; k < grid.nx; ++k) {
        const cplx* pf = p_faces.data() + static_cast<size_t>(k) * nf;
        cplx* pc = p.col(k);
        for (int j = 0; j < grid.ny; ++j) pc[j] = 0.5 * (pf[j] + pf[j + 1]);
    }
    return p;
}

// ------------------------------------------------------------ ScaledStepper

ScaledStepper::ScaledStepper(const GridSpec& grid, const DyadicPartition& part,
                             ScaledOptions opt)
    : grid_(grid),
      part_(part),
      opt_(std::move(opt)),
      fft_(grid),
      poisson_(grid, opt_.eps > 1e-8 ? opt_.eps : 1.0) {
    if (opt_.eps < 0.0 || opt_.eps > 1.0)
        throw ConfigError("ScaledStepper: eps must lie in (0, 1] (0 for the limit path)");
    if (opt_.eps <= 1e-8) {
        if (!opt_.limit_pressure)
            throw ConfigError("ScaledStepper: eps = 0 requires the limit pressure closure");
        limit_kernel_.emplace(grid_, part_, static_cast<const StepperOptions&>(opt_));
    }
}

void ScaledStepper::reset_history() {
    have_history_ = false;
    if (limit_kernel_) limit_kernel_->reset_history();
}

double ScaledStepper::dt_bound(const MhdState& state) const {
    const double h = grid_.dy();
    double uinf = 0.0;
    for (int j = 0; j < grid_.ny; ++j) {
        double s = 0.0;
        for (int k = 0; k < grid_.nx; ++k) s += std::abs(state.u.at(k, j));
        uinf = std::max(uinf, s);
    }
    return std::min(0.25 * h * h, 1.0 / (grid_.k_max() * uinf + 1.0));
}

double ScaledStepper::rate_now(const MhdState& state) const {
    switch (opt_.weight_mode) {
        case WeightMode::dynamic: return tau_rate(part_, state.u, state.v, opt_.eps);
        case WeightMode::prescribed: return opt_.prescribed_rate(state.time);
        case WeightMode::off: return 0.0;
    }
    return 0.0;
}

std::tuple<SpectralField, SpectralField, SpectralField> ScaledStepper::nonlinear_terms(
    const MhdState& state, double radius) {
    SpectralField nu(grid_), nv(grid_), nb(grid_);
    if (!opt_.nonlinear) {
        if (opt_.forcing) opt_.forcing(state.time, nu, nb);
        if (opt_.forcing_v) opt_.forcing_v(state.time, nv);
        return {std::move(nu), std::move(nv), std::move(nb)};
    }
    SpectralField u = apply_weight(state.u, radius, -1);
    SpectralField v = apply_weight(state.v, radius, -1);
    SpectralField b = apply_weight(state.b, radius, -1);
    SpectralField c = apply_weight(state.c, radius, -1);

    PhysField pu = fft_.to_physical_padded(u);
    PhysField pv = fft_.to_physical_padded(v);
    PhysField pb = fft_.to_physical_padded(b);
    PhysField pc = fft_.to_physical_padded(c);
    PhysField pux = fft_.to_physical_padded(u.dx());
    PhysField puy = fft_.to_physical_padded(u.dy_centered());
    PhysField pvx = fft_.to_physical_padded(v.dx());
    PhysField pvy = fft_.to_physical_padded(v.dy_centered());
    PhysField pbx = fft_.to_physical_padded(b.dx());
    PhysField pby = fft_.to_physical_padded(b.dy_centered());
    PhysField pcx = fft_.to_physical_padded(c.dx());
    PhysField pcy = fft_.to_physical_padded(c.dy_centered());

    PhysField ru(pu.mx, pu.ny), rv(pu.mx, pu.ny), rb(pu.mx, pu.ny);
    const size_t nn = pu.v.size();
    const bool mag = opt_.magnetic;
    for (size_t i = 0; i < nn; ++i) {
        ru.v[i] = -(pu.v[i] * pux.v[i] + pv.v[i] * puy.v[i]);
        rv.v[i] = -(pu.v[i] * pvx.v[i] + pv.v[i] * pvy.v[i]);
        rb.v[i] = -(pu.v[i] * pbx.v[i] + pv.v[i] * pby.v[i]);
        if (mag) {
            ru.v[i] += pb.v[i] * pbx.v[i] + pc.v[i] * pby.v[i];
            rv.v[i] += pb.v[i] * pcx.v[i] + pc.v[i] * pcy.v[i];
            rb.v[i] += pb.v[i] * pux.v[i] + pc.v[i] * puy.v[i];
        }
    }
    nu = fft_.to_spectral_truncated(ru);
    nv = fft_.to_spectral_truncated(rv);
    nb = fft_.to_spectral_truncated(rb);
    apply_weight_inplace(nu, radius, +1);
    apply_weight_inplace(nv, radius, +1);
    apply_weight_inplace(nb, radius, +1);
    nu.enforce_hermitian();
    nv.enforce_hermitian();
    nb.enforce_hermitian();
    nu.zero_x_mean();
    nb.zero_x_mean();
    if (opt_.forcing) opt_.forcing(state.time, nu, nb);
    if (opt_.forcing_v) opt_.forcing_v(state.time, nv);
    return {std::move(nu), std::move(nv), std::move(nb)};
}

void ScaledStepper::step(MhdState& state, AnalyticityState& an, double dt) {
    if (state.flavor != Flavor::scaled) throw UsageError("ScaledStepper: wrong flavor");
    if (limit_kernel_) {
        // formal eps -> 0 reduction: identical kernel as the limit system
        MhdState tmp = limit_kernel_->make_state();
        tmp.time = state.time;
        tmp.u = state.u;
        tmp.b = state.b;
        limit_kernel_->step(tmp, an, dt);
        rate_n_ = limit_kernel_->last_rate();
        rate_mid_ = limit_kernel_->last_rate_mid();
        state.time = tmp.time;
        state.u = tmp.u;
        state.v = tmp.v;
        state.b = tmp.b;
        state.c = tmp.c;
        const int nf = grid_.ny + 1;
        for (int k = 0; k < grid_.nx; ++k)
            for (int i = 0; i < nf; ++i)
                state.p_faces[static_cast<size_t>(k) * nf + i] = tmp.p_row[k];
        return;
    }
    if (!an.healthy) throw RadiusExhausted();
    if (!(dt > 0.0)) throw ValidationError("step: dt must be positive");

    const bool weighted = opt_.weight_mode != WeightMode::off;
    const double radius = weighted ? an.radius() : 0.0;
    const double eps = opt_.eps;
    rate_n_ = rate_now(state);
    if (opt_.weight_mode == WeightMode::prescribed)
        rate_mid_ = opt_.prescribed_rate(state.time + 0.5 * dt);
    else
        rate_mid_ = have_history_ ? 1.5 * rate_n_ - 0.5 * rate_prev_ : rate_n_;
    rate_mid_ = std::max(0.0, rate_mid_);

    auto [nu, nv, nb] = nonlinear_terms(state, radius);
    SpectralField rhs_u = have_history_ ? 1.5 * nu - 0.5 * nu_prev_ : nu;
    SpectralField rhs_v = have_history_ ? 1.5 * nv - 0.5 * nv_prev_ : nv;
    SpectralField rhs_b = have_history_ ? 1.5 * nb - 0.5 * nb_prev_ : nb;

    const double h = grid_.dy();
    const int n = grid_.ny, nf = n + 1;
    const double r = dt / (2.0 * h * h);
    std::vector<double> lo(n), di(n), up(n);
    std::vector<cplx> rhs(n);

    for (int k = 0; k < grid_.nx; ++k) {
        const double ak = grid_.abs_wavenumber(k);
        const double damp = weighted ? an.lambda * rate_mid_ * ak : 0.0;
        const double dhalf = 0.5 * dt * (damp + eps * eps * ak * ak);
        for (int j = 0; j < n; ++j) {
            lo[j] = -r;
            up[j] = -r;
            di[j] = 1.0 + dhalf + 2.0 * r;
        }
        const cplx ik{0.0, grid_.wavenumber(k)};
        const cplx* pf = state.p_faces.data() + static_cast<size_t>(k) * nf;

        auto assemble = [&](const SpectralField& f, const SpectralField* nl, bool is_u,
                            bool is_v) {
            const cplx* c = f.col(k);
            const cplx* s = nl ? nl->col(k) : nullptr;
            for (int j = 0; j < n; ++j) {
                const cplx up_v = (j + 1 < n) ? c[j + 1] : cplx{0.0, 0.0};
                const cplx dn_v = (j > 0) ? c[j - 1] : cplx{0.0, 0.0};
                rhs[j] = (1.0 - dhalf - 2.0 * r) * c[j] + r * (up_v + dn_v);
                if (s) rhs[j] += dt * s[j];
                if (is_u) rhs[j] -= dt * ik * 0.5 * (pf[j] + pf[j + 1]);
                if (is_v) rhs[j] -= dt * (pf[j + 1] - pf[j]) / (eps * eps * h);
            }
        };

        if (k != 0) {
            assemble(state.u, &rhs_u, opt_.nonlinear, false);
            ws_.solve(lo, di, up, rhs);
            for (int j = 0; j < n; ++j) state.u.at(k, j) = rhs[j];
        }

        assemble(state.v, &rhs_v, false, opt_.nonlinear);
        ws_.solve(lo, di, up, rhs);
        for (int j = 0; j < n; ++j) state.v.at(k, j) = rhs[j];

        if (k != 0) {
            assemble(state.b, &rhs_b, false, false);
            if (opt_.nonlinear)
                ws_.solve_with_zero_mean(lo, di, up, rhs);
            else
                ws_.solve(lo, di, up, rhs);
            for (int j = 0; j < n; ++j) state.b.at(k, j) = rhs[j];
        }

        if (!opt_.nonlinear) {
            // linear mode: plain anisotropic heat for c as well
            assemble(state.c, nullptr, false, false);
            ws_.solve(lo, di, up, rhs);
            for (int j = 0; j < n; ++j) state.c.at(k, j) = rhs[j];
        }
    }
    state.u.zero_x_mean();
    state.b.zero_x_mean();

    if (opt_.nonlinear) {
        // exact discrete projection; accumulate the face pressure increment
        SpectralField du = state.u, dv = state.v;
        du *= 1.0 / dt;
        dv *= (eps * eps) / dt;
        std::vector<cplx> dp = poisson_.solve(du, dv);
        poisson_.apply_gradient_correction(state.u, state.v, dp, dt);
        for (size_t i = 0; i < state.p_faces.size(); ++i) state.p_faces[i] += dp[i];
        state.u.zero_x_mean();
        state.c = recover_c(state.b, 1e-8);
    }

    state.u.enforce_hermitian();
    state.v.enforce_hermitian();
    state.b.enforce_hermitian();
    state.time += dt;

    nu_prev_ = std::move(nu);
    nv_prev_ = std::move(nv);
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
