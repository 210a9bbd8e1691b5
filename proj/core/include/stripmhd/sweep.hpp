#pragma once

#include "stripmhd/convergence.hpp"

namespace stripmhd {

/// Epsilon sweep over matched pairs with a shared profile / grid / horizon.
struct SweepPlan {
    RunConfig base;                // shared parameters; epsilons below
    std::vector<double> epsilons;  // strictly decreasing; >= 3 for a rate fit
    PairOptions pair;
    int threads = 0;  // 0: hardware concurrency

    void validate() const;
};

struct SweepResult {
    std::vector<PairResult> entries;
    bool fit_available = false;
    RateFit fit;                 // on (eps, E_sum) over healthy entries
    std::string fit_note;

    void write_csv(const std::string& path) const;
    std::string fit_json() const;
};

/// Runs every pair (parallel across entries) and fits the rate when at least
/// three healthy entries exist.
SweepResult run_sweep(const SweepPlan& plan);

}  // namespace stripmhd
