#include "stripmhd/energy_monitor.hpp"

#include <cmath>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "stripmhd/errors.hpp"

namespace stripmhd {

using nlohmann::json;

namespace {
std::string report_json(const std::string& run_id, const std::string& check,
                        const json& params, double lhs, double rhs, double ratio,
                        bool pass) {
    json j;
    j["run_id"] = run_id;
    j["check"] = check;
    j["params"] = params;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["ratio"] = ratio;
    j["pass"] = pass;
    return j.dump(2);
}
}  // namespace

std::string BoundReport::to_json(const std::string& run_id) const {
    return report_json(run_id, check, json::object(), lhs, rhs, ratio, pass);
}

BoundReport theorem1_check(const RunRecord& rec, const DyadicPartition& part, double C) {
    if (rec.flavor != Flavor::limit) throw UsageError("theorem1_check: needs a limit run");
    if (rec.series.n_samples() < 2) throw RangeError("theorem1_check: record too short");
    const double T = rec.series.times().back();
    const double R = rec.R;
    auto ert = [R](double t) { return std::exp(R * t); };

    BoundReport rep;
    rep.check = "theorem1";
    rep.lhs = cl_norm_of(rec, part, "u", kPinf, 0.5, T, ert) +
              cl_norm_of(rec, part, "b", kPinf, 0.5, T, ert) +
              cl_norm_of(rec, part, "u.dy", 2.0, 0.5, T, ert) +
              cl_norm_of(rec, part, "b.dy", 2.0, 0.5, T, ert);
    rep.rhs = rec.initial_b12;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    rep.pass = rep.ratio <= C;
    return rep;
}

BoundReport theorem2_check(const RunRecord& rec, const DyadicPartition& part, double C) {
    if (rec.flavor != Flavor::scaled) throw UsageError("theorem2_check: needs a scaled run");
    if (rec.series.n_samples() < 2) throw RangeError("theorem2_check: record too short");
    const double T = rec.series.times().back();
    const double R = rec.R;
    const double eps = rec.eps;
    auto ert = [R](double t) { return std::exp(R * t); };

    auto pair_inf = [&](const char* f, const char* g) {
        return cl_norm_of(rec, part, f, kPinf, 0.5, T, ert) +
               eps * cl_norm_of(rec, part, g, kPinf, 0.5, T, ert);
    };
    auto pair_l2 = [&](const char* f, const char* g) {
        return cl_norm_of(rec, part, f, 2.0, 0.5, T, ert) +
               eps * cl_norm_of(rec, part, g, 2.0, 0.5, T, ert);
    };

    BoundReport rep;
    rep.check = "theorem2";
    rep.lhs = pair_inf("u", "v") + pair_inf("b", "c") + pair_l2("u.dy", "v.dy") +
              pair_l2("b.dy", "c.dy") +
              eps * (cl_norm_of(rec, part, "u.dx", 2.0, 0.5, T, ert) +
                     eps * cl_norm_of(rec, part, "v.dx", 2.0, 0.5, T, ert)) +
              eps * (cl_norm_of(rec, part, "b.dx", 2.0, 0.5, T, ert) +
                     eps * cl_norm_of(rec, part, "c.dx", 2.0, 0.5, T, ert));
    rep.rhs = rec.smallness;  // weighted initial pair norms
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    rep.pass = rep.ratio <= C;
    return rep;
}

BoundReport theorem3_check(const PairResult& pair, double C) {
    BoundReport rep;
    rep.check = "theorem3";
    rep.lhs = pair.E_sum;
    rep.rhs = (pair.initial_diff_zero ? 0.0 : 1e300) + pair.M * pair.eps;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    rep.pass = rep.ratio <= C;
    return rep;
}

PersistenceReport persistence_check(const RunRecord& rec, double C) {
    PersistenceReport rep;
    rep.theta_final = rec.theta_final;
    rep.theta_cap = rec.a / rec.lambda;
    const auto& b12 = rec.series.column("besov_ub_half");
    for (double v : b12) rep.max_b12 = std::max(rep.max_b12, v);
    rep.smallness_cap = 1.0 / (2.0 * C * C);
    rep.pass = rec.health == "healthy" && rep.theta_final < rep.theta_cap &&
               rep.max_b12 <= rep.smallness_cap;
    return rep;
}

std::string Calibration::to_json() const {
    json j;
    j["C_calibrated"] = C;
    j["smallness_cap"] = smallness_cap;
    j["theta_margin"] = theta_margin;
    j["corpus_ids"] = corpus_ids;
    char buf[32];
    std::time_t now = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%Y-%m-%d", std::gmtime(&now));
    j["date"] = buf;
    return j.dump(2);
}

Calibration Calibration::from_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw UsageError("calibration: cannot open " + path);
    json j = json::parse(is);
    Calibration c;
    c.C = j.at("C_calibrated").get<double>();
    c.smallness_cap = j.value("smallness_cap", 1.0 / (2.0 * c.C * c.C));
    c.theta_margin = j.value("theta_margin", 0.0);
    if (j.contains("corpus_ids"))
        c.corpus_ids = j.at("corpus_ids").get<std::vector<std::string>>();
    return c;
}

void Calibration::write(const std::string& path) const {
    std::ofstream os(path);
    os << to_json() << "\n";
}

Calibration calibrate_constant(const std::vector<std::pair<std::string, double>>& ratios) {
    if (ratios.empty()) throw ValidationError("calibrate_constant: empty corpus");
    Calibration cal;
    for (const auto& [id, r] : ratios) {
        if (!(r > 0.0))
            throw ValidationError("calibrate_constant: ratio undefined for run " + id);
        cal.C = std::max(cal.C, r);
        cal.corpus_ids.push_back(id);
    }
    cal.C *= 1.5;
    cal.smallness_cap = 1.0 / (2.0 * cal.C * cal.C);
    cal.theta_margin = 1.0 / (2.0 * 4.0 * cal.C * cal.C);  // a/(2 lambda) per unit a
    return cal;
}

// -------------------------------------------------------------- block budget

namespace {

double block_l2sq(const DyadicPartition& part, const SpectralField& f, int q) {
    double s = 0.0;
    for (int k = 0; k < f.nx(); ++k) {
        const double w = part.phi(q, k);
        if (w != 0.0) s += w * w * f.col_l2sq(k);
    }
    return s;
}

double block_dy_l2sq(const DyadicPartition& part, const SpectralField& f, int q) {
    double s = 0.0;
    for (int k = 0; k < f.nx(); ++k) {
        const double w = part.phi(q, k);
        if (w != 0.0) s += w * w * f.col_dy_l2sq(k);
    }
    return s;
}

double block_halfdx_l2sq(const DyadicPartition& part, const SpectralField& f, int q) {
    double s = 0.0;
    for (int k = 0; k < f.nx(); ++k) {
        const double w = part.phi(q, k);
        if (w != 0.0) s += w * w * f.grid().abs_wavenumber(k) * f.col_l2sq(k);
    }
    return s;
}

double block_inner(const DyadicPartition& part, const SpectralField& f,
                   const SpectralField& g, int q) {
    const double L = f.grid().period_L, h = f.grid().dy();
    double s = 0.0;
    for (int k = 0; k < f.nx(); ++k) {
        const double w = part.phi(q, k);
        if (w == 0.0) continue;
        const cplx* a = f.col(k);
        const cplx* b = g.col(k);
        double sk = 0.0;
        for (int j = 0; j < f.ny(); ++j)
            sk += a[j].real() * b[j].real() + a[j].imag() * b[j].imag();
        s += w * w * sk;
    }
    return L * h * s;
}

}  // namespace

namespace {

// rate the stepper used at this sample, by flavor
double sample_rate(const RunRecord& rec, const DyadicPartition& part,
                   const StateSample& smp) {
    if (rec.flavor == Flavor::scaled)
        return tau_rate(part, smp.state.u, smp.state.v, rec.eps);
    return theta_rate(part, smp.state.u, smp.state.b);
}

BudgetLedger budget_ledger_range(const RunRecord& rec, const DyadicPartition& part,
                                 const std::string& equation, int step_begin,
                                 int step_end) {
    if (rec.snapshot_every != 1)
        throw RangeError("block_budget: snapshot cadence must be 1 (record every step)");
    if (step_end <= step_begin) throw UsageError("block_budget: empty window");
    if (static_cast<size_t>(step_end) >= rec.samples.size())
        throw RangeError("block_budget: window beyond recorded horizon");
    if (equation != "u" && equation != "b")
        throw UsageError(
            "block_budget: equation must be 'u' or 'b' (the eps-scaled second components "
            "are slaved to the divergence constraints and carry no separate budget row)");
    const bool u_eq = equation == "u";
    const bool scaled = rec.flavor == Flavor::scaled;
    const double eps = rec.eps;

    // every term recomputed from states through the monitor's own pipeline
    FftEngine fft(rec.grid);
    const double dt = rec.dt;
    const int nq = part.n_blocks();
    const int nsteps = step_end - step_begin;

    BudgetLedger led;
    led.q_min = part.q_min();
    led.q_max = part.q_max();
    led.steps = nsteps;
    led.names = {"ddt_energy", "damping", "dissipation"};
    if (scaled) led.names.push_back("dissipation_dx");
    std::vector<std::string> flux_names =
        u_eq ? std::vector<std::string>{"I1", "I2", "I3", "I4"}
             : std::vector<std::string>{"D1", "D2", "D3", "D4"};
    if (scaled)
        flux_names = u_eq ? std::vector<std::string>{"F1.uux", "F1.vuy", "F3.bbx", "F3.cby"}
                          : std::vector<std::string>{"F5.ubx", "F5.vby", "F5.bux", "F5.cuy"};
    for (const auto& nm : flux_names) led.names.push_back(nm);
    led.names.push_back("pressure_flux");
    if (scaled && u_eq) led.names.push_back("projection");
    for (const auto& nm : led.names)
        led.terms[nm].assign(nsteps, std::vector<double>(nq, 0.0));

    auto term_fields = [&](const StateSample& smp, double radius) {
        // the four flux integrands of the equation, weighted, in paper order
        SpectralField u = apply_weight(smp.state.u, radius, -1);
        SpectralField b = apply_weight(smp.state.b, radius, -1);
        SpectralField v = scaled ? apply_weight(smp.state.v, radius, -1)
                                 : recover_v(u, 1e-6);
        SpectralField c = recover_c(b, 1e-6);
        std::vector<SpectralField> t;
        if (u_eq) {
            t.push_back(fft.multiply_dealiased(u, u.dx()));           // I1: u dx u
            t.push_back(fft.multiply_dealiased(v, u.dy_centered()));  // I2: v dy u
            t.push_back(fft.multiply_dealiased(b, b.dx()));           // I3: b dx b
            t.push_back(fft.multiply_dealiased(c, b.dy_centered()));  // I4: c dy b
        } else {
            t.push_back(fft.multiply_dealiased(u, b.dx()));           // D1: u dx b
            t.push_back(fft.multiply_dealiased(v, b.dy_centered()));  // D2: v dy b
            t.push_back(fft.multiply_dealiased(b, u.dx()));           // D3: b dx u
            t.push_back(fft.multiply_dealiased(c, u.dy_centered()));  // D4: c dy u
        }
        for (SpectralField& f : t) {
            apply_weight_inplace(f, radius, +1);
            f.enforce_hermitian();
            f.zero_x_mean();
        }
        return t;
    };

    std::vector<SpectralField> prev_terms;
    int prev_terms_step = -999;

    for (int n = step_begin; n < step_end; ++n) {
        const int row = n - step_begin;
        const StateSample& s0 = rec.samples[static_cast<size_t>(n)];
        const StateSample& s1 = rec.samples[static_cast<size_t>(n) + 1];
        const SpectralField& f0 = u_eq ? s0.state.u : s0.state.b;
        const SpectralField& f1 = u_eq ? s1.state.u : s1.state.b;

        const double rate_n = sample_rate(rec, part, s0);
        double rate_mid = rate_n;
        if (n > 0) {
            const StateSample& sm = rec.samples[static_cast<size_t>(n) - 1];
            rate_mid = std::max(0.0, 1.5 * rate_n - 0.5 * sample_rate(rec, part, sm));
        }
        const double radius0 = rec.a - rec.lambda * s0.theta;

        SpectralField mid = f0 + f1;
        mid *= 0.5;

        for (int q = part.q_min(); q <= part.q_max(); ++q) {
            const size_t qi = static_cast<size_t>(q - part.q_min());
            led.terms["ddt_energy"][row][qi] =
                0.5 * (block_l2sq(part, f1, q) - block_l2sq(part, f0, q));
            led.terms["damping"][row][qi] =
                dt * rec.lambda * rate_mid * block_halfdx_l2sq(part, mid, q);
            led.terms["dissipation"][row][qi] = dt * block_dy_l2sq(part, mid, q);
            if (scaled) {
                double s = 0.0;
                for (int k = 0; k < rec.grid.nx; ++k) {
                    const double w = part.phi(q, k);
                    if (w == 0.0) continue;
                    const double ak = rec.grid.abs_wavenumber(k);
                    s += w * w * ak * ak * mid.col_l2sq(k);
                }
                led.terms["dissipation_dx"][row][qi] = dt * eps * eps * s;
            }
        }

        // <Delta_q dx p_phi, Delta_q mid>: the y-constant gradient pairs with
        // the (exactly zero) vertical mean of mid
        if (u_eq && !scaled) {
            for (int q = part.q_min(); q <= part.q_max(); ++q) {
                double pf = 0.0;
                for (int k = 0; k < rec.grid.nx; ++k) {
                    const double w = part.phi(q, k);
                    if (w == 0.0) continue;
                    const cplx dxp = cplx{0.0, rec.grid.wavenumber(k)} * s1.state.p_row[k];
                    cplx msum{0.0, 0.0};
                    const cplx* cmid = mid.col(k);
                    for (int j = 0; j < rec.grid.ny; ++j) msum += cmid[j];
                    pf += w * w * (dxp.real() * msum.real() + dxp.imag() * msum.imag());
                }
                led.terms["pressure_flux"][row][static_cast<size_t>(q - part.q_min())] =
                    dt * rec.grid.period_L * rec.grid.dy() * pf;
            }
        }

        if (u_eq && scaled) {
            // effective pressure over the step is the updated face profile;
            // the projection's correction enters the CN identity through
            // (dt/2) A G(dp) with A the implicit operator
            const int nf = rec.grid.ny + 1;
            const double h = rec.grid.dy();
            SpectralField gp(rec.grid), gdp(rec.grid);
            for (int k = 0; k < rec.grid.nx; ++k) {
                const cplx ik{0.0, rec.grid.wavenumber(k)};
                const cplx* p1 = s1.state.p_faces.data() + static_cast<size_t>(k) * nf;
                const cplx* p0 = s0.state.p_faces.data() + static_cast<size_t>(k) * nf;
                for (int j = 0; j < rec.grid.ny; ++j) {
                    gp.at(k, j) = ik * 0.5 * (p1[j] + p1[j + 1]);
                    const cplx dlo = p1[j] - p0[j];
                    const cplx dhi = p1[j + 1] - p0[j + 1];
                    gdp.at(k, j) = ik * 0.5 * (dlo + dhi);
                }
            }
            // A g = ((lambda rate_mid |k| + eps^2 k^2) I - L) g
            SpectralField agdp(rec.grid);
            for (int k = 0; k < rec.grid.nx; ++k) {
                const double ak = rec.grid.abs_wavenumber(k);
                const double coef = rec.lambda * rate_mid * ak + eps * eps * ak * ak;
                const cplx* g = gdp.col(k);
                cplx* out = agdp.col(k);
                for (int j = 0; j < rec.grid.ny; ++j) {
                    const cplx up_v = (j + 1 < rec.grid.ny) ? g[j + 1] : cplx{0.0, 0.0};
                    const cplx dn_v = (j > 0) ? g[j - 1] : cplx{0.0, 0.0};
                    out[j] = coef * g[j] - (up_v - 2.0 * g[j] + dn_v) / (h * h);
                }
            }
            for (int q = part.q_min(); q <= part.q_max(); ++q) {
                const size_t qi = static_cast<size_t>(q - part.q_min());
                led.terms["pressure_flux"][row][qi] = dt * block_inner(part, gp, mid, q);
                led.terms["projection"][row][qi] =
                    dt * 0.5 * dt * block_inner(part, agdp, mid, q);
            }
        }

        if (rec.cfg.nonlinear) {
            std::vector<SpectralField> tn = term_fields(s0, radius0);
            std::vector<SpectralField> that;
            if (n > 0) {
                if (prev_terms_step != n - 1) {
                    const StateSample& sm = rec.samples[static_cast<size_t>(n) - 1];
                    const double radius_m = rec.a - rec.lambda * sm.theta;
                    prev_terms = term_fields(sm, radius_m);
                }
                for (size_t i = 0; i < tn.size(); ++i)
                    that.push_back(1.5 * tn[i] - 0.5 * prev_terms[i]);
            } else {
                that = tn;
            }
            const double sign[4] = {-1.0, -1.0, +1.0, +1.0};
            for (size_t i = 0; i < 4; ++i)
                for (int q = part.q_min(); q <= part.q_max(); ++q)
                    led.terms[flux_names[i]][row][static_cast<size_t>(q - part.q_min())] =
                        dt * sign[i] * block_inner(part, that[i], mid, q);
            prev_terms = std::move(tn);
            prev_terms_step = n;
        }
    }
    return led;
}

}  // namespace

BudgetLedger budget_ledger(const RunRecord& rec, const DyadicPartition& part,
                           const std::string& equation) {
    return budget_ledger_range(rec, part, equation, 0,
                               static_cast<int>(rec.samples.size()) - 1);
}

EnergyBudget window_budget(const BudgetLedger& led, int q, int step_begin, int step_end) {
    if (q < led.q_min || q > led.q_max) throw UsageError("window_budget: q out of range");
    if (step_begin < 0 || step_end > led.steps || step_end <= step_begin)
        throw RangeError("window_budget: bad window");
    const size_t qi = static_cast<size_t>(q - led.q_min);

    EnergyBudget out;
    out.q = q;
    out.step_begin = step_begin;
    out.step_end = step_end;
    // left-hand-side entries of the per-block identity; everything else is flux
    auto is_lhs = [](const std::string& nm) {
        return nm == "ddt_energy" || nm == "damping" || nm == "dissipation" ||
               nm == "dissipation_dx" || nm == "projection";
    };
    double flux_total = 0.0, lhs_total = 0.0;
    for (const std::string& nm : led.names) {
        double acc = 0.0;
        const auto& rows = led.terms.at(nm);
        for (int n = step_begin; n < step_end; ++n) acc += rows[static_cast<size_t>(n)][qi];
        if (nm == "pressure_flux") {
            out.pressure_flux = acc;
            lhs_total += acc;
            continue;
        }
        out.terms[nm] = acc;
        if (is_lhs(nm))
            lhs_total += acc;
        else
            flux_total += acc;
    }
    out.residual = lhs_total - flux_total;
    for (const auto& [k, v] : out.terms) out.max_term = std::max(out.max_term, std::abs(v));
    out.max_term = std::max(out.max_term, std::abs(out.pressure_flux));
    return out;
}

EnergyBudget block_budget(const RunRecord& rec, const DyadicPartition& part, int q,
                          int step_begin, int step_end, const std::string& equation) {
    BudgetLedger led = budget_ledger_range(rec, part, equation, step_begin, step_end);
    EnergyBudget out = window_budget(led, q, 0, step_end - step_begin);
    out.step_begin = step_begin;
    out.step_end = step_end;
    return out;
}

// ---------------------------------------------------------- trilinear checks

std::string TrilinearReport::to_json(const std::string& run_id) const {
    json params;
    params["lemma"] = lemma;
    return report_json(run_id, "trilinear", params, lhs, rhs, constant, pass);
}

TrilinearReport trilinear_check(const RunRecord& rec, const DyadicPartition& part,
                                const std::string& lemma, double s, double C_pass) {
    if (!(s > 0.0 && s <= 1.0)) throw ValidationError("trilinear_check: s must lie in (0, 1]");
    if (rec.samples.size() < 2) throw RangeError("trilinear_check: record holds no snapshots");
    const double R = rec.R;
    const double eps = rec.eps;
    FftEngine fft(rec.grid);

    const bool needs_scaled = lemma == "4.1";
    if (needs_scaled && rec.flavor != Flavor::scaled)
        throw UsageError("trilinear_check: estimate 4.1 needs a scaled run");

    // lhs: trapezoid over snapshots of e^{2Rt} |< Delta_q (A dB)_phi, Delta_q C_phi >|
    std::vector<double> times;
    std::vector<std::vector<double>> pairing;  // [sample][q]
    for (const StateSample& smp : rec.samples) {
        const double radius = rec.a - rec.lambda * smp.theta;
        SpectralField u = apply_weight(smp.state.u, radius, -1);
        SpectralField b = apply_weight(smp.state.b, radius, -1);

        SpectralField prod(rec.grid);
        const SpectralField* C_field = nullptr;
        SpectralField Cw(rec.grid);
        double scale = 1.0;
        if (lemma == "3.2") {            // (u dx u, u)
            prod = fft.multiply_dealiased(u, u.dx());
            Cw = smp.state.u;
            C_field = &Cw;
        } else if (lemma == "3.3") {     // (v dy u, u), v = -int dx u
            SpectralField v = recover_v(u, 1e-6);
            prod = fft.multiply_dealiased(v, u.dy_centered());
            Cw = smp.state.u;
            C_field = &Cw;
        } else if (lemma == "3.4a") {    // (b dx u, b)
            prod = fft.multiply_dealiased(b, u.dx());
            Cw = smp.state.b;
            C_field = &Cw;
        } else if (lemma == "3.4b") {    // (c dy u, b)
            SpectralField c = recover_c(b, 1e-6);
            prod = fft.multiply_dealiased(c, u.dy_centered());
            Cw = smp.state.b;
            C_field = &Cw;
        } else if (lemma == "4.1") {     // eps^2 (v dy v, v)
            SpectralField v = apply_weight(smp.state.v, radius, -1);
            prod = fft.multiply_dealiased(v, v.dy_centered());
            Cw = smp.state.v;
            C_field = &Cw;
            scale = eps * eps;
        } else {
            throw UsageError("trilinear_check: unknown estimate id " + lemma +
                             " (expect 3.2, 3.3, 3.4a, 3.4b, 4.1)");
        }
        apply_weight_inplace(prod, radius, +1);
        prod.enforce_hermitian();

        const double e2rt = std::exp(2.0 * R * smp.state.time);
        std::vector<double> row;
        for (int qq = part.q_min(); qq <= part.q_max(); ++qq)
            row.push_back(scale * e2rt * std::abs(block_inner(part, prod, *C_field, qq)));
        times.push_back(smp.state.time);
        pairing.push_back(std::move(row));
    }

    TrilinearReport rep;
    rep.lemma = lemma;
    double lhs = 0.0;
    for (int qq = part.q_min(); qq <= part.q_max(); ++qq) {
        const size_t qi = static_cast<size_t>(qq - part.q_min());
        double acc = 0.0;
        for (size_t i = 1; i < times.size(); ++i)
            acc += 0.5 * (pairing[i - 1][qi] + pairing[i][qi]) * (times[i] - times[i - 1]);
        lhs += std::pow(2.0, 2.0 * s * qq) * acc;
    }
    rep.lhs = lhs;

    const double T = rec.series.times().back();
    auto ert = [R](double t) { return std::exp(R * t); };
    const std::vector<double>& rate = rec.series.column("theta_rate");
    auto wcl = [&](const char* base) {
        return cl_norm_of(rec, part, base, 2.0, s + 0.5, T, ert, &rate);
    };

    if (lemma == "3.2" || lemma == "3.3")
        rep.rhs = wcl("u") * wcl("u");
    else if (lemma == "3.4a")
        rep.rhs = wcl("u") * wcl("b");
    else if (lemma == "3.4b")
        rep.rhs = wcl("b") * wcl("b");
    else  // 4.1
        rep.rhs = std::pow(wcl("u") + eps * wcl("v"), 2.0);

    if (rep.rhs <= 1e-300) {
        if (rep.lhs > 1e-12)
            throw ValidationError("trilinear_check: zero rhs with nonzero lhs");
        rep.vacuous = true;
        rep.pass = true;
        return rep;
    }
    rep.constant = rep.lhs / rep.rhs;
    rep.pass = rep.constant <= C_pass;
    return rep;
}

}  // namespace stripmhd
