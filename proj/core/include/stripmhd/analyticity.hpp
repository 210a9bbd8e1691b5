#pragma once

#include "stripmhd/besov.hpp"
#include "stripmhd/errors.hpp"
#include "stripmhd/spectral_field.hpp"

namespace stripmhd {

/// Tracks the analyticity band of one run: remaining radius a - lambda*theta,
/// with theta accumulated from the recorded loss rate. The same structure
/// serves the limit run (theta), the scaled run (tau) and the convergence
/// comparison (eta with coefficient mu).
struct AnalyticityState {
    double a = 0.0;       // initial radius
    double lambda = 0.0;  // damping coefficient (mu for convergence weights)
    double theta = 0.0;   // accumulated loss, theta(0) = 0
    bool healthy = true;  // radius still open

    AnalyticityState() = default;
    AnalyticityState(double a_, double lambda_) : a(a_), lambda(lambda_) {
        if (!(a > 0.0)) throw ValidationError("AnalyticityState: a must be positive");
        if (!(lambda > 0.0)) throw ValidationError("AnalyticityState: lambda must be positive");
    }

    double radius() const { return a - lambda * theta; }
    bool persistent() const { return theta <= a / lambda; }
};

/// Multiply coefficients by e^{sign * radius * |k|}. sign=-1 removes a weight,
/// sign=+1 applies one. Exact inverse pair.
SpectralField apply_weight(const SpectralField& f, double radius, int sign);

/// In-place variant.
void apply_weight_inplace(SpectralField& f, double radius, int sign);

/// theta-dot of the limit run: ||dy u_phi||_{B^{1/2}} + ||dy b_phi||_{B^{1/2}}
/// (pair norms are sums of component norms).
double theta_rate(const DyadicPartition& part, const SpectralField& u_phi,
                  const SpectralField& b_phi);

/// tau-dot of the scaled run: ||dy u_phi||_{B^{1/2}} + eps ||dy v_phi||_{B^{1/2}}.
double tau_rate(const DyadicPartition& part, const SpectralField& u_phi,
                const SpectralField& v_phi, double eps);

/// eta-dot of a matched pair:
/// ||dy u^eps_phi||_{B^{1/2}} + eps ||dx u^eps_phi||_{B^{1/2}} + ||dy u_phi||_{B^{1/2}}.
double eta_rate(const DyadicPartition& part, const SpectralField& scaled_u_phi, double eps,
                const SpectralField& limit_u_phi);

/// Explicit Euler on theta; clears the healthy flag when the band closes.
void advance_radius(AnalyticityState& st, double rate, double dt);

}  // namespace stripmhd
