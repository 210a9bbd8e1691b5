#include "stripmhd/analyticity.hpp"

#include <cmath>

#include "stripmhd/errors.hpp"

namespace stripmhd {

namespace {
void check_weight_args(const SpectralField& f, double radius, int sign) {
    if (radius < 0.0) throw ValidationError("apply_weight: radius must be nonnegative");
    if (sign != 1 && sign != -1) throw UsageError("apply_weight: sign must be +-1");
    if (radius * f.grid().k_max() > 700.0)
        throw ValidationError("apply_weight: radius too large for grid");
}
}  // namespace

void apply_weight_inplace(SpectralField& f, double radius, int sign) {
    check_weight_args(f, radius, sign);
    for (int k = 0; k < f.nx(); ++k) {
        const double w = std::exp(sign * radius * f.grid().abs_wavenumber(k));
        cplx* c = f.col(k);
        for (int j = 0; j < f.ny(); ++j) c[j] *= w;
    }
}

SpectralField apply_weight(const SpectralField& f, double radius, int sign) {
    SpectralField g = f;
    apply_weight_inplace(g, radius, sign);
    return g;
}

namespace {
double dy_b12(const DyadicPartition& part, const SpectralField& f) {
    return besov_norm_from_energies(part, f.col_dy_energies(), 0.5);
}
double dx_b12(const DyadicPartition& part, const SpectralField& f) {
    std::vector<double> e = f.col_energies();
    for (int k = 0; k < f.nx(); ++k) {
        const double ak = f.grid().abs_wavenumber(k);
        e[k] *= ak * ak;
    }
    return besov_norm_from_energies(part, e, 0.5);
}
}  // namespace

double theta_rate(const DyadicPartition& part, const SpectralField& u_phi,
                  const SpectralField& b_phi) {
    return dy_b12(part, u_phi) + dy_b12(part, b_phi);
}

double tau_rate(const DyadicPartition& part, const SpectralField& u_phi,
                const SpectralField& v_phi, double eps) {
    return dy_b12(part, u_phi) + eps * dy_b12(part, v_phi);
}

double eta_rate(const DyadicPartition& part, const SpectralField& scaled_u_phi, double eps,
                const SpectralField& limit_u_phi) {
    return dy_b12(part, scaled_u_phi) + eps * dx_b12(part, scaled_u_phi) +
           dy_b12(part, limit_u_phi);
}

void advance_radius(AnalyticityState& st, double rate, double dt) {
    if (rate < 0.0) throw ValidationError("advance_radius: rate must be nonnegative");
    if (!(dt > 0.0)) throw ValidationError("advance_radius: dt must be positive");
    st.theta += dt * rate;
    if (st.radius() <= 0.0) st.healthy = false;
}

}  // namespace stripmhd
