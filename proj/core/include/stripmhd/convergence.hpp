#pragma once

#include <map>
#include <optional>
#include <string>

#include "stripmhd/runner.hpp"

namespace stripmhd {

/// Component-wise differences (scaled - limit) of unweighted variables.
/// Both states must share grid and time; weights are stripped by the caller
/// (the two runs carry different radii).
MhdState difference_fields(const MhdState& scaled, const MhdState& limit, double tol_div);

/// Result of one matched (scaled, limit) lockstep pair.
struct PairResult {
    double eps = 0.0;
    bool healthy = true;
    std::string health = "healthy";

    std::vector<double> times;        // evaluation cadence
    std::vector<double> eta;          // accumulated at the cadence
    double eta_final = 0.0;
    double mu = 0.0;                  // Theta-weight coefficient used
    double M = 0.0;                   // regularity envelope of the pair
    bool theta_dominated = true;      // Theta <= min(phi_limit, phi_scaled) held
    bool initial_diff_zero = true;    // identical-initial-data construction

    std::map<std::string, double> terms;  // E_term_1 .. E_term_6
    double E_sum = 0.0;   // sum of the six display terms
    double E_prod = 0.0;  // variant with term2 * term3 as printed
};

struct PairOptions {
    double C = 4.0;            // constant feeding mu = C * M
    double mu_override = 0.0;  // > 0: fixed mu
    int eval_every = 0;        // 0: auto (~160 samples)
};

/// Runs the scaled system at eps and the limit system in lockstep from the
/// same initial data, accumulates eta every step, and evaluates the
/// Theta-weighted difference norms at the cadence.
PairResult run_convergence_pair(const RunConfig& base, double eps, const PairOptions& opt);

struct RateFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0, ci_halfwidth = 0.0;
    int entries_used = 0;
    std::vector<std::string> notes;
};

/// Least squares on (log eps, log E); zero entries are excluded with a note.
RateFit fit_rate(const std::vector<std::pair<double, double>>& eps_E);

}  // namespace stripmhd
