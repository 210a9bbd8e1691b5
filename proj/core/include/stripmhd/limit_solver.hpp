#pragma once

#include <functional>
#include <optional>

#include "stripmhd/analyticity.hpp"
#include "stripmhd/fft.hpp"
#include "stripmhd/state.hpp"
#include "stripmhd/tridiag.hpp"

namespace stripmhd {

/// v(., y) = -int_0^y dx f, by cumulative trapezoid from the wall. Vanishes
/// at y = 0 by construction and at y = 1 iff the vertical mean of f is zero;
/// the staggered divergence of (f, recover) vanishes identically.
SpectralField recover_v(const SpectralField& u, double tol_scale = 1e-10);
SpectralField recover_c(const SpectralField& b, double tol_scale = 1e-10);

/// Wall traces of d/dy by one-sided second-order stencils using the zero
/// wall value: returns (trace at y=0, trace at y=1) per mode.
struct WallTraces {
    std::vector<cplx> lower, upper;
};
WallTraces dy_wall_traces(const SpectralField& f);

/// Hydrostatic pressure gradient from unweighted fields:
///   dx p = [dy u](x,1) - [dy u](x,0) - dx int_0^1 u^2 dy + dx int_0^1 b^2 dy.
/// This is the vertical-mean-conserving closure; the k = 0 slot is 0.
/// Returns per-mode values of (dx p)^hat.
std::vector<cplx> pressure_gradient(FftEngine& fft, const SpectralField& u,
                                    const SpectralField& b);

/// Thrown when the analyticity band closes; stepping refuses to continue.
struct RadiusExhausted : std::runtime_error {
    RadiusExhausted() : std::runtime_error("analyticity radius exhausted") {}
};
/// Thrown when a non-finite value appears in the state.
struct DivergedState : std::runtime_error {
    explicit DivergedState(double t)
        : std::runtime_error("state diverged (NaN/Inf) at t = " + std::to_string(t)) {}
};

enum class WeightMode { dynamic, prescribed, off };

struct StepperOptions {
    double R = 1.0;  // time-exponential rate used by monitors; kept in config
    bool nonlinear = true;
    bool magnetic = true;
    WeightMode weight_mode = WeightMode::dynamic;
    std::function<double(double)> prescribed_rate;  // used when prescribed
    /// MMS hook: adds weighted-space sources to (u, b) evolution at time t.
    std::function<void(double, SpectralField&, SpectralField&)> forcing;
};

/// IMEX stepper for the weighted hydrostatic limit system: Crank-Nicolson in
/// the wall-normal diffusion and |D_x| damping, Adams-Bashforth-2 in the
/// nonlinear terms, per-mode tridiagonal solves with a y-constant multiplier
/// that pins the vertical means (the pressure for u, the wall-flux gauge for b).
class LimitStepper {
public:
    LimitStepper(const GridSpec& grid, const DyadicPartition& part, StepperOptions opt);

    MhdState make_state() const { return MhdState(grid_, Flavor::limit); }

    /// One step; advances state.time and the analyticity state.
    void step(MhdState& state, AnalyticityState& an, double dt);

    /// CFL-style bound dt <= min(0.25 dy^2, 1/(k_max ||u||_inf + 1)).
    double dt_bound(const MhdState& state) const;

    /// Instantaneous theta-dot the stepper would use at this state.
    double rate_now(const MhdState& state) const;

    double last_rate() const { return rate_n_; }
    double last_rate_mid() const { return rate_mid_; }
    const StepperOptions& options() const { return opt_; }
    void reset_history();

    /// Explicit weighted nonlinear terms (N_u, N_b) at the state's time;
    /// exposed so monitors can recompute fluxes from snapshots.
    std::pair<SpectralField, SpectralField> nonlinear_terms(const MhdState& state,
                                                            double radius);

private:
    GridSpec grid_;
    const DyadicPartition& part_;
    StepperOptions opt_;
    FftEngine fft_;
    TridiagWorkspace ws_;
    bool have_history_ = false;
    SpectralField nu_prev_, nb_prev_;
    double rate_prev_ = 0.0, rate_n_ = 0.0, rate_mid_ = 0.0;
};

}  // namespace stripmhd
