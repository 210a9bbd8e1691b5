#pragma once

#include <optional>

#include "stripmhd/limit_solver.hpp"

namespace stripmhd {

/// Anisotropic pressure solve (dx^2 + eps^-2 dy^2) p = div_eps(g) as per-mode
/// tridiagonal BVPs on the y-face grid. `g_u`, `g_v` are momentum residual
/// densities at nodes; optional wall traces supply the Neumann closure of the
/// v-equation (zero when omitted). The k = 0 mode is gauge-fixed to zero
/// y-mean via a row substitution.
/// Discrete operators: node->face average for the x-part, face difference for
/// the y-part, matching the staggered divergence exactly, so the projection
/// built on this solve annihilates the discrete divergence to roundoff.
class PressurePoisson {
public:
    PressurePoisson(const GridSpec& grid, double eps);

    /// p at faces, layout [k * (ny + 1) + face].
    std::vector<cplx> solve(const SpectralField& g_u, const SpectralField& g_v,
                            const std::vector<cplx>* gv_wall0 = nullptr,
                            const std::vector<cplx>* gv_wall1 = nullptr);

    /// Subtract grad(p): u -= scale * ik avg(p), v -= scale * eps^-2 D(p).
    void apply_gradient_correction(SpectralField& u, SpectralField& v,
                                   const std::vector<cplx>& p_faces, double scale) const;

    /// Project (u, v) onto the divergence-free space in the staggered
    /// operators; returns the face pressure that was removed.
    std::vector<cplx> project(SpectralField& u, SpectralField& v);

    double eps() const { return eps_; }

private:
    GridSpec grid_;
    double eps_;
    TridiagWorkspace ws_;
};

/// Node-centered evaluation of a face pressure (second-order average), for
/// reporting; the dynamics always uses the face values.
SpectralField pressure_faces_to_nodes(const GridSpec& grid, const std::vector<cplx>& p_faces);

struct ScaledOptions : StepperOptions {
    double eps = 0.1;
    /// Replace the 2D pressure by the hydrostatic closure; requires eps == 0.
    bool limit_pressure = false;
    /// MMS hook for the v-momentum source (the base forcing covers u and b).
    std::function<void(double, SpectralField&)> forcing_v;
};

/// IMEX stepper for the weighted eps-scaled anisotropic system: CN in
/// eps^2 dx^2 + dy^2 and the |D_x| damping, AB2 in the nonlinear terms,
/// incremental pressure-correction with exact discrete projection of (u, v).
/// The magnetic pair evolves b and slaves c to the divergence constraint
/// (the structure that propagates div B = 0 exactly on the grid); the
/// vertical mean of b is pinned by the same y-constant gauge as the limit
/// system. At eps = 0 the update reduces to the limit kernel.
class ScaledStepper {
public:
    ScaledStepper(const GridSpec& grid, const DyadicPartition& part, ScaledOptions opt);

    MhdState make_state() const { return MhdState(grid_, Flavor::scaled); }

    void step(MhdState& state, AnalyticityState& an, double dt);

    double dt_bound(const MhdState& state) const;
    double rate_now(const MhdState& state) const;
    double last_rate() const { return rate_n_; }
    double last_rate_mid() const { return rate_mid_; }
    const ScaledOptions& options() const { return opt_; }
    void reset_history();

    /// Explicit weighted nonlinear terms (N_u, N_v, N_b) at the state's time.
    std::tuple<SpectralField, SpectralField, SpectralField> nonlinear_terms(
        const MhdState& state, double radius);

private:
    GridSpec grid_;
    const DyadicPartition& part_;
    ScaledOptions opt_;
    FftEngine fft_;
    PressurePoisson poisson_;
    TridiagWorkspace ws_;
    std::optional<LimitStepper> limit_kernel_;  // eps = 0 path
    bool have_history_ = false;
    SpectralField nu_prev_, nv_prev_, nb_prev_;
    double rate_prev_ = 0.0, rate_n_ = 0.0, rate_mid_ = 0.0;
};

}  // namespace stripmhd
