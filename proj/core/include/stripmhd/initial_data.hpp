#pragma once

#include <string>

#include "stripmhd/analyticity.hpp"
#include "stripmhd/dyadic.hpp"
#include "stripmhd/state.hpp"

namespace stripmhd {

/// Unweighted initial fields from the named catalog, amplitude delta.
/// Profiles ("mode1", "mode2", "packet", "zero") are band-limited or
/// Gaussian-modulated in x, sin(2 pi y)-type in y; every profile has exact
/// zero vertical mean per mode, so the recovery compatibility holds.
struct InitialData {
    SpectralField u0, b0;
};
InitialData make_profile(const GridSpec& grid, const std::string& profile, double delta);

struct PreparedState {
    MhdState state;            // weighted variables at t = 0
    double smallness = 0.0;    // ||e^{a|Dx|}(u0, eps v0)||_B1/2 + magnetic pair
    bool within_theory = true; // smallness <= c1 * a with the active threshold
};

/// Weighted initial state for a limit run (eps ignored) or a scaled run.
/// v0, c0 come from the recovery operators applied to u0, b0. The smallness
/// of the weighted data is evaluated against `c1 * a` and recorded; violation
/// flags the run "outside-theory" but does not stop it.
PreparedState make_initial_state(const GridSpec& grid, const DyadicPartition& part,
                                 Flavor flavor, const std::string& profile, double delta,
                                 double eps, double a, double c1);

}  // namespace stripmhd
