#include "stripmhd/convergence.hpp"

#include <cmath>

#include "stripmhd/errors.hpp"

namespace stripmhd {

MhdState difference_fields(const MhdState& scaled, const MhdState& limit, double tol_div) {
    if (!(scaled.grid() == limit.grid()))
        throw UsageError("difference_fields: grid mismatch");
    if (std::abs(scaled.time - limit.time) > 1e-12 * (1.0 + std::abs(scaled.time)))
        throw UsageError("difference_fields: time mismatch");
    MhdState d(scaled.grid(), Flavor::difference);
    d.time = scaled.time;
    d.u = scaled.u - limit.u;
    d.v = scaled.v - limit.v;
    d.b = scaled.b - limit.b;
    d.c = scaled.c - limit.c;
    const int nf = scaled.grid().ny + 1;
    for (int k = 0; k < scaled.grid().nx; ++k) {
        const cplx prow = limit.p_row.empty() ? cplx{0.0, 0.0} : limit.p_row[k];
        for (int i = 0; i < nf; ++i) {
            const cplx ps = scaled.p_faces.empty() ? cplx{0.0, 0.0}
                                                   : scaled.p_faces[static_cast<size_t>(k) * nf + i];
            d.p_faces[static_cast<size_t>(k) * nf + i] = ps - prow;
        }
    }
    const double dv = divergence_residual(d.u, d.v);
    const double db = divergence_residual(d.b, d.c);
    if (dv > 2.0 * tol_div || db > 2.0 * tol_div)
        throw ValidationError("difference_fields: divergence not inherited");
    return d;
}

namespace {

struct DiffSample {
    double time;
    SpectralField psi1, psi2, phi1, phi2;  // unweighted differences
};

double block_cl(const DyadicPartition& part, const std::vector<double>& times,
                const std::vector<std::vector<double>>& rows, double p, double s) {
    return chemin_lerner_aggregate(times, rows, part.q_min(), p, s - besov_dx_order(s),
                                   times.back());
}

// block norms of d_x^m f with the Theta weight applied
std::vector<double> weighted_blocks(const DyadicPartition& part, const SpectralField& f,
                                    double radius, int m, bool of_dy) {
    SpectralField w = apply_weight(f, radius, +1);
    std::vector<double> e = of_dy ? w.col_dy_energies() : w.col_energies();
    if (m > 0)
        for (int k = 0; k < f.nx(); ++k) {
            const double ak = f.grid().abs_wavenumber(k);
            e[k] *= std::pow(ak * ak, m);
        }
    return block_l2_norms(part, e);
}

}  // namespace

PairResult run_convergence_pair(const RunConfig& base, double eps, const PairOptions& opt) {
    GridSpec grid(base.L, base.nx, base.ny);
    DyadicPartition part(grid);

    PairResult out;
    out.eps = eps;

    const double lambda = base.lambda_effective();
    PreparedState prep_l = make_initial_state(grid, part, Flavor::limit, base.profile,
                                              base.delta, 0.0, base.a, base.c1);
    PreparedState prep_s = make_initial_state(grid, part, Flavor::scaled, base.profile,
                                              base.delta, eps, base.a, base.c1);
    // identical-initial-data construction: the unweighted (u0, b0) coincide
    out.initial_diff_zero = true;

    StepperOptions so_base;
    so_base.R = base.R;
    so_base.nonlinear = base.nonlinear;
    so_base.magnetic = base.magnetic;
    so_base.weight_mode = WeightMode::dynamic;
    LimitStepper limit(grid, part, so_base);
    ScaledOptions so;
    static_cast<StepperOptions&>(so) = so_base;
    so.eps = eps;
    ScaledStepper scaled(grid, part, so);

    MhdState st_l = prep_l.state;
    MhdState st_s = prep_s.state;
    AnalyticityState an_l(base.a, lambda);
    AnalyticityState an_s(base.a, lambda);

    double dt = base.dt;
    if (dt <= 0.0) dt = std::min(limit.dt_bound(st_l), scaled.dt_bound(st_s));
    const double t_end = base.sweep_t_end > 0.0 ? base.sweep_t_end : base.t_end;
    const int steps = std::max(1, static_cast<int>(std::ceil(t_end / dt - 1e-9)));
    dt = t_end / steps;

    int eval_every = opt.eval_every;
    if (eval_every <= 0) eval_every = std::max(1, steps / 160);

    std::vector<DiffSample> diffs;
    std::vector<double> eta_at_eval;
    double eta = 0.0;

    // limit-side norm families for M (B^{1/2} and B^{5/2}, dy, dt)
    std::vector<double> m_times;
    std::vector<std::vector<double>> mu_b12, mb_b12, mu_b52, mb_b52;
    std::vector<std::vector<double>> mudy_b12, mbdy_b12, mudy_b52, mbdy_b52;
    std::vector<std::vector<double>> mdtu_b32, mdtb_b32;
    std::vector<std::vector<double>> su_b12, sb_b12;
    MhdState prev_l = st_l;
    double prev_radius_l = an_l.radius();

    auto eval_sample = [&](int step) {
        const double rl = an_l.radius(), rs = an_s.radius();
        DiffSample d;
        d.time = st_l.time;
        d.psi1 = apply_weight(st_s.u, rs, -1) - apply_weight(st_l.u, rl, -1);
        d.psi2 = apply_weight(st_s.v, rs, -1) - apply_weight(st_l.v, rl, -1);
        d.phi1 = apply_weight(st_s.b, rs, -1) - apply_weight(st_l.b, rl, -1);
        d.phi2 = apply_weight(st_s.c, rs, -1) - apply_weight(st_l.c, rl, -1);
        diffs.push_back(std::move(d));
        eta_at_eval.push_back(eta);

        m_times.push_back(st_l.time);
        auto blocks = [&](const SpectralField& f, int m, bool dy) {
            std::vector<double> e = dy ? f.col_dy_energies() : f.col_energies();
            if (m > 0)
                for (int k = 0; k < grid.nx; ++k) {
                    const double ak = grid.abs_wavenumber(k);
                    e[k] *= std::pow(ak * ak, m);
                }
            return block_l2_norms(part, e);
        };
        mu_b12.push_back(blocks(st_l.u, 0, false));
        mb_b12.push_back(blocks(st_l.b, 0, false));
        mu_b52.push_back(blocks(st_l.u, 2, false));
        mb_b52.push_back(blocks(st_l.b, 2, false));
        mudy_b12.push_back(blocks(st_l.u, 0, true));
        mbdy_b12.push_back(blocks(st_l.b, 0, true));
        mudy_b52.push_back(blocks(st_l.u, 2, true));
        mbdy_b52.push_back(blocks(st_l.b, 2, true));
        su_b12.push_back(blocks(st_s.u, 0, false));
        sb_b12.push_back(blocks(st_s.b, 0, false));
        if (step == 0) {
            mdtu_b32.push_back(std::vector<double>(part.n_blocks(), 0.0));
            mdtb_b32.push_back(std::vector<double>(part.n_blocks(), 0.0));
        } else {
            // (d_t u)_phi ~ (u^n - u^{n-1})/dt, unweighted then reweighted
            SpectralField du = apply_weight(st_l.u, an_l.radius(), -1) -
                               apply_weight(prev_l.u, prev_radius_l, -1);
            SpectralField db = apply_weight(st_l.b, an_l.radius(), -1) -
                               apply_weight(prev_l.b, prev_radius_l, -1);
            du *= 1.0 / dt;
            db *= 1.0 / dt;
            apply_weight_inplace(du, an_l.radius(), +1);
            apply_weight_inplace(db, an_l.radius(), +1);
            mdtu_b32.push_back(blocks(du, 1, false));
            mdtb_b32.push_back(blocks(db, 1, false));
        }
    };

    eval_sample(0);
    try {
        for (int n = 0; n < steps; ++n) {
            prev_l = st_l;
            prev_radius_l = an_l.radius();
            const double ed = eta_rate(part, st_s.u, eps, st_l.u);
            limit.step(st_l, an_l, dt);
            scaled.step(st_s, an_s, dt);
            eta += dt * ed;
            if ((n + 1) % eval_every == 0 || n + 1 == steps) eval_sample(n + 1);
        }
    } catch (const RadiusExhausted&) {
        out.healthy = false;
        out.health = "radius_exhausted";
    } catch (const DivergedState&) {
        out.healthy = false;
        out.health = "diverged";
    }
    out.eta_final = eta;
    if (!out.healthy) return out;

    // M per (5M): scaled Linf(B 1/2) + limit Linf(B 1/2 cap B 5/2)
    //            + dy limit L2(B 1/2 cap B 5/2) + dt limit L2(B 3/2)
    auto agg = [&](const std::vector<std::vector<double>>& rows, double p, double s) {
        return block_cl(part, m_times, rows, p, s);
    };
    const double m_scaled = agg(su_b12, kPinf, 0.5) + agg(sb_b12, kPinf, 0.5);
    const double m_linf = std::max(agg(mu_b12, kPinf, 0.5) + agg(mb_b12, kPinf, 0.5),
                                   agg(mu_b52, kPinf, 0.5) + agg(mb_b52, kPinf, 0.5));
    const double m_dy = std::max(agg(mudy_b12, 2.0, 0.5) + agg(mbdy_b12, 2.0, 0.5),
                                 agg(mudy_b52, 2.0, 0.5) + agg(mbdy_b52, 2.0, 0.5));
    const double m_dt = agg(mdtu_b32, 2.0, 0.5) + agg(mdtb_b32, 2.0, 0.5);
    out.M = m_scaled + m_linf + m_dy + m_dt;
    // mu = C max(1, M), floored at lambda (the Theta weight must not outlive
    // either run's band)
    out.mu = opt.mu_override > 0.0 ? opt.mu_override
                                   : std::max(lambda, opt.C * std::max(1.0, out.M));

    // Theta radius and domination check
    std::vector<double> theta_radius(diffs.size());
    for (size_t i = 0; i < diffs.size(); ++i) {
        theta_radius[i] = base.a - out.mu * eta_at_eval[i];
        if (theta_radius[i] < 0.0) {
            out.healthy = false;
            out.health = "theta_radius_exhausted";
            return out;
        }
    }
    // domination recorded against the two running radii at the end times
    out.theta_dominated = out.mu * out.eta_final >= lambda * an_l.theta - 1e-12 &&
                          out.mu * out.eta_final >= lambda * an_s.theta - 1e-12;

    // E terms under the Theta weight
    const size_t ns = diffs.size();
    std::vector<double> times(ns);
    auto rows_of = [&](auto&& extract, int m, bool dy) {
        std::vector<std::vector<double>> rows(ns);
        for (size_t i = 0; i < ns; ++i) {
            rows[i] = weighted_blocks(part, extract(diffs[i]), theta_radius[i], m, dy);
            times[i] = diffs[i].time;
        }
        return rows;
    };
    auto psi1 = [](const DiffSample& d) -> const SpectralField& { return d.psi1; };
    auto psi2 = [](const DiffSample& d) -> const SpectralField& { return d.psi2; };
    auto phi1 = [](const DiffSample& d) -> const SpectralField& { return d.phi1; };
    auto phi2 = [](const DiffSample& d) -> const SpectralField& { return d.phi2; };

    auto pair_norm = [&](auto f1, auto f2, double p, double s, bool dy) {
        const double n1 = block_cl(part, times, rows_of(f1, besov_dx_order(s), dy), p, s);
        const double n2 = block_cl(part, times, rows_of(f2, besov_dx_order(s), dy), p, s);
        return n1 + eps * n2;
    };

    const double T1 = pair_norm(psi1, psi2, kPinf, 0.5, false);
    const double T2 = pair_norm(phi1, phi2, kPinf, 0.5, false);
    const double T3 = pair_norm(psi1, psi2, 2.0, 0.5, true);
    const double T4 = eps * pair_norm(psi1, psi2, 2.0, 1.5, false);
    const double T5 = pair_norm(phi1, phi2, 2.0, 0.5, true);
    const double T6 = eps * pair_norm(phi1, phi2, 2.0, 1.5, false);

    out.terms = {{"E_term_1", T1}, {"E_term_2", T2}, {"E_term_3", T3},
                 {"E_term_4", T4}, {"E_term_5", T5}, {"E_term_6", T6}};
    out.E_sum = T1 + T2 + T3 + T4 + T5 + T6;
    out.E_prod = T1 + T2 * T3 + T4 + T5 + T6;
    out.times = std::move(times);
    out.eta = std::move(eta_at_eval);
    return out;
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& eps_E) {
    RateFit fit;
    std::vector<double> x, y;
    for (const auto& [e, E] : eps_E) {
        if (!(E > 0.0)) {
            fit.notes.push_back("excluded eps = " + std::to_string(e) + " (E = 0)");
            continue;
        }
        x.push_back(std::log(e));
        y.push_back(std::log(E));
    }
    const int n = static_cast<int>(x.size());
    fit.entries_used = n;
    if (n < 3) throw ValidationError("fit_rate: need at least 3 nonzero entries");

    double sx = 0, sy = 0;
    for (int i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += r * r;
    }
    fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    if (n > 2) {
        const double se = std::sqrt(ss_res / (n - 2) / sxx);
        fit.ci_halfwidth = 1.96 * se;
    }
    return fit;
}

}  // namespace stripmhd
