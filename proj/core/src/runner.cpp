#include "stripmhd/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stripmhd/errors.hpp"
#include "stripmhd/snapshot_io.hpp"

namespace stripmhd {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string qtag(const std::string& base, int q) {
    return base + ".q" + std::to_string(q);
}

void record_family(NormSeries& ns, const DyadicPartition& part, const std::string& base,
                   const std::vector<double>& energies, int max_dx_order) {
    const GridSpec& g = part.grid();
    std::vector<double> e = energies;
    for (int m = 0; m <= max_dx_order; ++m) {
        const std::string name = (m == 0) ? base : (m == 1 ? base + ".dx" : base + ".dxx");
        if (m > 0)
            for (int k = 0; k < g.nx; ++k) {
                const double ak = g.abs_wavenumber(k);
                e[k] = e[k] * ak * ak;
            }
        std::vector<double> bn = block_l2_norms(part, e);
        for (int q = part.q_min(); q <= part.q_max(); ++q)
            ns.set(qtag(name, q), bn[static_cast<size_t>(q - part.q_min())]);
    }
}

void record_sample(NormSeries& ns, const DyadicPartition& part, const MhdState& st,
                   const AnalyticityState& an, double rate_n, double rate_mid) {
    ns.append_time(st.time);
    ns.set("theta", an.theta);
    ns.set("theta_rate", rate_n);
    ns.set("theta_rate_mid", rate_mid);
    ns.set("radius_remaining", std::max(0.0, an.radius()));
    ns.set("div_residual", divergence_residual(st.u, st.v));
    ns.set("div_residual_mag", divergence_residual(st.b, st.c));
    ns.set("mean_residual_u", vertical_mean_residual(st.u));
    ns.set("mean_residual_b", vertical_mean_residual(st.b));
    ns.set("besov_ub_half", besov_norm_from_energies(part, st.u.col_energies(), 0.5) +
                                besov_norm_from_energies(part, st.b.col_energies(), 0.5));

    record_family(ns, part, "u", st.u.col_energies(), 2);
    record_family(ns, part, "b", st.b.col_energies(), 2);
    record_family(ns, part, "u.dy", st.u.col_dy_energies(), 2);
    record_family(ns, part, "b.dy", st.b.col_dy_energies(), 2);
    record_family(ns, part, "v", st.v.col_energies(), 1);
    record_family(ns, part, "c", st.c.col_energies(), 1);
    record_family(ns, part, "v.dy", st.v.col_dy_energies(), 0);
    record_family(ns, part, "c.dy", st.c.col_dy_energies(), 0);
}

}  // namespace

const StateSample& RunRecord::sample_at_step(int step) const {
    if (snapshot_every <= 0) throw RangeError("run record holds no snapshots");
    if (step % snapshot_every != 0)
        throw RangeError("no snapshot at step " + std::to_string(step) +
                         " (cadence " + std::to_string(snapshot_every) + ")");
    const size_t idx = static_cast<size_t>(step / snapshot_every);
    if (idx >= samples.size()) throw RangeError("step beyond recorded horizon");
    return samples[idx];
}

RunRecord run_simulation(const RunConfig& cfg) {
    GridSpec grid(cfg.L, cfg.nx, cfg.ny);
    DyadicPartition part(grid);

    RunRecord rec;
    rec.cfg = cfg;
    rec.grid = grid;
    rec.flavor = cfg.flavor();
    rec.eps = cfg.epsilon;
    rec.a = cfg.a;
    rec.lambda = cfg.lambda_effective();
    rec.R = cfg.R;
    rec.q_min = part.q_min();
    rec.q_max = part.q_max();

    PreparedState prep = make_initial_state(grid, part, rec.flavor, cfg.profile, cfg.delta,
                                            cfg.epsilon, cfg.a, cfg.c1);
    rec.smallness = prep.smallness;
    rec.within_theory = prep.within_theory;
    rec.initial_b12 = besov_norm(part, prep.state.u, 0.5) + besov_norm(part, prep.state.b, 0.5);

    StepperOptions base;
    base.R = cfg.R;
    base.nonlinear = cfg.nonlinear;
    base.magnetic = cfg.magnetic;
    base.weight_mode = WeightMode::dynamic;

    std::unique_ptr<LimitStepper> limit;
    std::unique_ptr<ScaledStepper> scaled;
    if (rec.flavor == Flavor::limit) {
        limit = std::make_unique<LimitStepper>(grid, part, base);
    } else {
        ScaledOptions so;
        static_cast<StepperOptions&>(so) = base;
        so.eps = cfg.epsilon;
        scaled = std::make_unique<ScaledStepper>(grid, part, so);
    }

    MhdState state = prep.state;
    AnalyticityState an(cfg.a, rec.lambda);

    double dt = cfg.dt;
    if (dt <= 0.0) dt = limit ? limit->dt_bound(state) : scaled->dt_bound(state);
    const int steps = std::max(1, static_cast<int>(std::ceil(cfg.t_end / dt - 1e-9)));
    dt = cfg.t_end / steps;
    rec.dt = dt;
    rec.steps = steps;

    int record_every = cfg.record_every;
    if (record_every <= 0) record_every = std::max(1, steps / 1500);
    rec.snapshot_every = cfg.snapshot_every;

    auto take_snapshot = [&](int step, double rate_n, double rate_mid) {
        if (rec.snapshot_every <= 0 || step % rec.snapshot_every != 0) return;
        rec.samples.push_back(StateSample{step, state, an.theta, rate_n, rate_mid});
    };

    double r0 = limit ? limit->rate_now(state) : scaled->rate_now(state);
    record_sample(rec.series, part, state, an, r0, r0);
    take_snapshot(0, r0, r0);

    try {
        for (int n = 0; n < steps; ++n) {
            if (limit)
                limit->step(state, an, dt);
            else
                scaled->step(state, an, dt);
            const double rn = limit ? limit->last_rate() : scaled->last_rate();
            const double rm = limit ? limit->last_rate_mid() : scaled->last_rate_mid();
            if ((n + 1) % record_every == 0 || n + 1 == steps)
                record_sample(rec.series, part, state, an, rn, rm);
            take_snapshot(n + 1, rn, rm);
        }
    } catch (const RadiusExhausted&) {
        rec.health = "radius_exhausted";
    } catch (const DivergedState&) {
        rec.health = "diverged";
    }
    rec.theta_final = an.theta;
    return rec;
}

std::string write_run_record(const RunRecord& rec, const std::string& dir,
                             const std::string& run_id) {
    const fs::path root = fs::path(dir) / run_id;
    fs::create_directories(root);

    std::ostringstream meta;
    meta << "q_min=" << rec.q_min << " q_max=" << rec.q_max << " dt=" << rec.dt
         << " steps=" << rec.steps;
    rec.series.write_csv((root / "norms.csv").string(), meta.str());

    int n_snaps = 0;
    if (!rec.samples.empty()) {
        fs::create_directories(root / "snapshots");
        char name[32];
        for (const StateSample& s : rec.samples) {
            std::snprintf(name, sizeof name, "step%08d.snap", s.step);
            write_snapshot((root / "snapshots" / name).string(), s.state, rec.a, rec.lambda,
                           s.theta);
            ++n_snaps;
        }
    }

    json man;
    man["run_id"] = run_id;
    man["config"] = json::parse(config_to_json(rec.cfg));
    man["flavor"] = flavor_name(rec.flavor);
    man["outputs"] = {{"norms_csv", "norms.csv"},
                      {"snapshots_dir", "snapshots"},
                      {"n_snapshots", n_snaps}};
    man["health"] = rec.health;
    man["smallness"] = rec.smallness;
    man["within_theory"] = rec.within_theory;
    man["theta_final"] = rec.theta_final;
    man["initial_b12"] = rec.initial_b12;
    man["q_range"] = {rec.q_min, rec.q_max};
    man["dt"] = rec.dt;
    man["steps"] = rec.steps;
    man["snapshot_every"] = rec.snapshot_every;
    man["lambda"] = rec.lambda;

    const fs::path tmp = root / "manifest.json.tmp";
    const fs::path final = root / "manifest.json";
    {
        std::ofstream os(tmp);
        os << man.dump(2) << "\n";
    }
    fs::rename(tmp, final);
    return final.string();
}

RunRecord load_run_record(const std::string& dir) {
    const fs::path root(dir);
    std::ifstream ms(root / "manifest.json");
    if (!ms) throw UsageError("run record: no manifest under " + dir);
    json man = json::parse(ms);

    RunRecord rec;
    rec.cfg = parse_config_text(man.at("config").dump());
    rec.grid = GridSpec(rec.cfg.L, rec.cfg.nx, rec.cfg.ny);
    rec.flavor = flavor_from_name(man.at("flavor").get<std::string>());
    rec.eps = rec.cfg.epsilon;
    rec.a = rec.cfg.a;
    rec.lambda = man.at("lambda").get<double>();
    rec.R = rec.cfg.R;
    rec.health = man.at("health").get<std::string>();
    rec.smallness = man.at("smallness").get<double>();
    rec.within_theory = man.at("within_theory").get<bool>();
    rec.theta_final = man.at("theta_final").get<double>();
    rec.initial_b12 = man.value("initial_b12", 0.0);
    rec.q_min = man.at("q_range")[0].get<int>();
    rec.q_max = man.at("q_range")[1].get<int>();
    rec.dt = man.at("dt").get<double>();
    rec.steps = man.at("steps").get<int>();
    rec.snapshot_every = man.at("snapshot_every").get<int>();

    rec.series = NormSeries::read_csv((root / "norms.csv").string());

    if (rec.snapshot_every > 0) {
        // rate tags are reconstructed by the monitors from the states
        char name[32];
        for (int step = 0;; step += rec.snapshot_every) {
            std::snprintf(name, sizeof name, "step%08d.snap", step);
            const fs::path p = root / "snapshots" / name;
            if (!fs::exists(p)) break;
            Snapshot snap = read_snapshot(p.string());
            rec.samples.push_back(StateSample{step, std::move(snap.state),
                                              snap.header.theta, 0.0, 0.0});
        }
    }
    return rec;
}

double cl_norm_of(const RunRecord& rec, const DyadicPartition& part, const std::string& base,
                  double p, double s, double T, const std::function<double(double)>& mult,
                  const std::vector<double>* weight_series) {
    const int m = besov_dx_order(s);
    if (m > 2) throw ValidationError("cl_norm_of: s beyond recorded derivative families");
    const std::string name = (m == 0) ? base : (m == 1 ? base + ".dx" : base + ".dxx");

    const auto& times = rec.series.times();
    std::vector<std::vector<double>> rows(times.size());
    for (int q = part.q_min(); q <= part.q_max(); ++q) {
        const auto& col = rec.series.column(qtag(name, q));
        for (size_t i = 0; i < times.size(); ++i) rows[i].push_back(col[i]);
    }

    std::function<double(double)> weight;
    if (weight_series) {
        if (weight_series->size() != times.size())
            throw UsageError("cl_norm_of: weight series length mismatch");
        std::vector<double> ts(times.begin(), times.end());
        std::vector<double> ws(*weight_series);
        weight = [ts, ws](double t) {
            auto it = std::lower_bound(ts.begin(), ts.end(), t);
            if (it == ts.begin()) return ws.front();
            if (it == ts.end()) return ws.back();
            const size_t hi = static_cast<size_t>(it - ts.begin());
            const double a = (t - ts[hi - 1]) / (ts[hi] - ts[hi - 1]);
            return (1.0 - a) * ws[hi - 1] + a * ws[hi];
        };
    }
    return chemin_lerner_aggregate(times, rows, part.q_min(), p, s - m, T, mult, weight);
}

}  // namespace stripmhd
