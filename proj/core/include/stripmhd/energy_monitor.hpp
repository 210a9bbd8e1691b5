#pragma once

#include <map>
#include <string>

#include "stripmhd/convergence.hpp"
#include "stripmhd/runner.hpp"

namespace stripmhd {

/// lhs / rhs / pass report for the monitored a priori bounds.
struct BoundReport {
    std::string check;
    double lhs = 0.0, rhs = 0.0, ratio = 0.0;
    bool pass = false;
    std::string to_json(const std::string& run_id) const;
};

/// Global-bound monitor for a limit run:
/// lhs = ||e^{Rt}(u,b)||_{Linf_T(B 1/2)} + ||e^{Rt} dy(u,b)||_{L2_T(B 1/2)},
/// rhs = ||weighted initial (u0,b0)||_{B 1/2}; pass iff ratio <= C.
BoundReport theorem1_check(const RunRecord& rec, const DyadicPartition& part, double C);

/// Six-term uniform bound for a scaled run (pair norms with the eps-scaled
/// second components, eps-weighted dx terms).
BoundReport theorem2_check(const RunRecord& rec, const DyadicPartition& part, double C);

/// Convergence bound for one matched pair: lhs is the difference functional,
/// rhs the initial-difference terms plus M eps.
BoundReport theorem3_check(const PairResult& pair, double C);

/// Persistence: theta stays below a/lambda and the B^{1/2} size never leaves
/// the smallness set 1/(2 C^2).
struct PersistenceReport {
    double theta_final = 0.0, theta_cap = 0.0;
    double max_b12 = 0.0, smallness_cap = 0.0;
    bool pass = false;
};
PersistenceReport persistence_check(const RunRecord& rec, double C);

/// C_calibrated = 1.5 x max observed ratio; thresholds derived from it.
struct Calibration {
    double C = 0.0;
    double smallness_cap = 0.0;   // 1/(2 C^2)
    double theta_margin = 0.0;    // a/(2 lambda) with lambda = 4 C^2
    std::vector<std::string> corpus_ids;
    std::string to_json() const;
    static Calibration from_json_file(const std::string& path);
    void write(const std::string& path) const;
};
Calibration calibrate_constant(const std::vector<std::pair<std::string, double>>& ratios);

/// Time-integrated per-block energy budget of one evolution equation over a
/// step window, every term recomputed from the snapshots through the same
/// discrete operators the stepper uses. The Crank-Nicolson identity makes
/// the residual vanish to roundoff when the recomputation matches the step.
struct EnergyBudget {
    int q = 0;
    int step_begin = 0, step_end = 0;
    std::map<std::string, double> terms;  // ddt_energy, damping, dissipation, fluxes
    double residual = 0.0;
    double max_term = 0.0;
    double pressure_flux = 0.0;  // reported separately; 0 for limit runs
};

/// equation: "u" (I1..I4 fluxes) or "b" (D1..D4). Requires snapshot cadence 1.
EnergyBudget block_budget(const RunRecord& rec, const DyadicPartition& part, int q,
                          int step_begin, int step_end, const std::string& equation);

/// Per-step budget terms for every block at once: the product pipeline runs
/// once per step, so scanning all windows costs one pass over the record.
/// terms[name][step][q - q_min] integrates the named contribution over one step.
struct BudgetLedger {
    int q_min = 0, q_max = -1;
    int steps = 0;
    std::vector<std::string> names;
    std::map<std::string, std::vector<std::vector<double>>> terms;
};
BudgetLedger budget_ledger(const RunRecord& rec, const DyadicPartition& part,
                           const std::string& equation);
EnergyBudget window_budget(const BudgetLedger& led, int q, int step_begin, int step_end);

/// Numerically checked trilinear product estimates. lhs is the full pairing
/// sum_q 2^{2qs} int_0^T |< e^{Rt} Delta_q (A dx B)_phi, e^{Rt} Delta_q C_phi >|,
/// rhs the product of weighted Chemin-Lerner norms the estimate pairs it with.
struct TrilinearReport {
    std::string lemma;  // estimate id
    double lhs = 0.0, rhs = 0.0, constant = 0.0;
    bool vacuous = false;
    bool pass = false;
    std::string to_json(const std::string& run_id) const;
};

/// Estimate ids: "3.2" (A dx B against C), "3.3" (recovered-B dy A against C),
/// "3.4a"/"3.4b" (magnetic cross terms), "4.1" (eps^2-weighted v dy v).
/// s in (0, 1].
TrilinearReport trilinear_check(const RunRecord& rec, const DyadicPartition& part,
                                const std::string& lemma, double s, double C_pass);

}  // namespace stripmhd
