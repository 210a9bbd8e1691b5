#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stripmhd/analyticity.hpp"
#include "stripmhd/initial_data.hpp"
#include "stripmhd/run_config.hpp"
#include "stripmhd/scaled_solver.hpp"

namespace stripmhd {

/// Full state kept at snapshot cadence, enough to reproduce every term of
/// the step from the record alone.
struct StateSample {
    int step = 0;
    MhdState state;
    double theta = 0.0;     // accumulated band loss at this step
    double rate_n = 0.0;    // instantaneous rate the stepper computed here
    double rate_mid = 0.0;  // extrapolated midpoint rate used by the step
};

struct RunRecord {
    RunConfig cfg;
    GridSpec grid;
    Flavor flavor = Flavor::limit;
    double eps = 0.0;
    double dt = 0.0;
    int steps = 0;
    double a = 0.0, lambda = 0.0, R = 1.0;
    int q_min = 0, q_max = -1;

    NormSeries series;                // cadenced norm tags
    std::vector<StateSample> samples; // snapshot cadence (empty if disabled)
    int snapshot_every = 0;

    double smallness = 0.0;
    bool within_theory = true;
    std::string health = "healthy";   // healthy | radius_exhausted | diverged
    double theta_final = 0.0;

    double initial_b12 = 0.0;  // ||e^{a|Dx|}(u0,b0)||_{B 1/2} (+ eps pair terms)

    const StateSample& sample_at_step(int step) const;
};

/// Norm-series tags recorded per sample: scalars theta, theta_rate,
/// theta_rate_mid, radius_remaining, div_residual, mean_residual, and block
/// families F.qN / F.dx.qN / F.dxx.qN / F.dy.qN / F.dy.dx.qN / F.dy.dxx.qN
/// for F in {u, b} plus F / F.dx / F.dy for F in {v, c}.
RunRecord run_simulation(const RunConfig& cfg);

/// Writes norms.csv, snapshots/stepNNNNNNNN.snap and manifest.json under
/// dir; the manifest lands atomically last. Returns the manifest path.
std::string write_run_record(const RunRecord& rec, const std::string& dir,
                             const std::string& run_id);

/// Reloads a disk record produced by write_run_record.
RunRecord load_run_record(const std::string& dir);

/// Family lookup helpers for Chemin-Lerner evaluation on a record. `base` is
/// e.g. "u" or "u.dy"; the x-derivative suffix is chosen from s.
double cl_norm_of(const RunRecord& rec, const DyadicPartition& part,
                  const std::string& base, double p, double s, double T,
                  const std::function<double(double)>& mult = {},
                  const std::vector<double>* weight_series = {});

}  // namespace stripmhd
