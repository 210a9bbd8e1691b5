#pragma once

#include <string>
#include <vector>

#include "stripmhd/spectral_field.hpp"

namespace stripmhd {

enum class Flavor { limit, scaled, difference };

std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& s);

/// One system's unknowns at a time instant. Solver-produced states hold the
/// weighted variables (u_phi, v_phi, b_phi, c_phi). Pressure storage depends
/// on the flavor: y-constant row per mode for the limit system, y-face
/// profile per mode for the scaled system (difference states carry faces).
struct MhdState {
    Flavor flavor = Flavor::limit;
    double time = 0.0;
    SpectralField u, v, b, c;
    std::vector<cplx> p_row;    // [k], limit flavor
    std::vector<cplx> p_faces;  // [k * (ny + 1) + face], scaled/difference

    MhdState() = default;
    MhdState(const GridSpec& grid, Flavor fl);

    const GridSpec& grid() const { return u.grid(); }

    bool all_finite() const;
};

/// Staggered divergence residual, max over modes and faces of
/// |ik (f_j + f_{j+1})/2 + (g_{j+1} - g_j)/dy| with zero wall values.
/// This is the discrete operator the recovery construction annihilates.
double divergence_residual(const SpectralField& f, const SpectralField& g);

/// max over modes of |dy * sum_j fhat(k, j)| (the trapezoid vertical mean).
double vertical_mean_residual(const SpectralField& f);

}  // namespace stripmhd
