#include "stripmhd/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stripmhd/errors.hpp"

namespace stripmhd {

namespace {
// g(t) = h(t) / (h(t) + h(1-t)) with h(t) = exp(-1/t): 0 for t <= 0, 1 for
// t >= 1, C^inf monotone in between.
template <typename T>
T smooth_ramp(T t) {
    if (t <= T(0)) return T(0);
    if (t >= T(1)) return T(1);
    T a = std::exp(T(-1) / t);
    T b = std::exp(T(-1) / (T(1) - t));
    return a / (a + b);
}
}  // namespace

double lp_step(double z) {
    // 1 on [0, 3/4], 0 on [4/3, inf).
    if (z <= 0.75) return 1.0;
    if (z >= 4.0 / 3.0) return 0.0;
    return smooth_ramp((4.0 / 3.0 - z) / (4.0 / 3.0 - 0.75));
}

namespace {
double lp_phi(double z) { return lp_step(0.5 * z) - lp_step(z); }

int default_q_min(const GridSpec& grid) {
    const int from_kmin = static_cast<int>(std::floor(std::log2(grid.k_min_nonzero()))) - 1;
    return std::min(-2, from_kmin);
}
int default_q_max(const GridSpec& grid) {
    return static_cast<int>(std::ceil(std::log2(grid.k_max()))) + 2;
}
}  // namespace

DyadicPartition::DyadicPartition(const GridSpec& grid)
    : DyadicPartition(grid, default_q_min(grid), default_q_max(grid)) {}

DyadicPartition::DyadicPartition(const GridSpec& grid, int q_min, int q_max)
    : grid_(grid), q_min_(q_min), q_max_(q_max) {
    if (q_max_ < q_min_) throw ConfigError("DyadicPartition: empty q range");
    build();
    // The telescoped sum equals step(2^{-(q_max+1)} |k|) - step(2^{-q_min} |k|);
    // both ends must sit on the constant plateaus for every nonzero wavenumber.
    for (int k = 0; k < grid_.nx; ++k) {
        const double z = grid_.abs_wavenumber(k);
        if (z == 0.0) continue;
        if (std::ldexp(z, -(q_max_ + 1)) > 0.75 || std::ldexp(z, -q_min_) < 4.0 / 3.0) {
            std::ostringstream os;
            os << "DyadicPartition: q range [" << q_min_ << ", " << q_max_
               << "] does not cover wavenumber |k| = " << z;
            throw ConfigError(os.str());
        }
    }
}

void DyadicPartition::build() {
    phi_.assign(static_cast<size_t>(n_blocks()) * grid_.nx, 0.0);
    for (int q = q_min_; q <= q_max_; ++q)
        for (int k = 0; k < grid_.nx; ++k) {
            const double z = std::ldexp(grid_.abs_wavenumber(k), -q);
            phi_[static_cast<size_t>(q - q_min_) * grid_.nx + k] = lp_phi(z);
        }
}

double DyadicPartition::psi(int q, int kidx) const {
    return lp_step(std::ldexp(grid_.abs_wavenumber(kidx), -q));
}

double DyadicPartition::partition_sum(int kidx) const {
    double s = 0.0;
    for (int q = q_min_; q <= q_max_; ++q) s += phi(q, kidx);
    return s;
}

std::pair<int, int> DyadicPartition::blocks_covering(double z) const {
    if (z <= 0.0) return {1, 0};
    const int lo = std::max(q_min_, static_cast<int>(std::ceil(std::log2(z * 3.0 / 8.0))));
    const int hi = std::min(q_max_, static_cast<int>(std::floor(std::log2(z * 4.0 / 3.0))));
    return {lo, hi};
}

SpectralField dyadic_block(const DyadicPartition& part, const SpectralField& f, int q) {
    SpectralField g(f.grid());
    for (int k = 0; k < f.nx(); ++k) {
        const double w = part.phi(q, k);
        if (w == 0.0) continue;
        const cplx* src = f.col(k);
        cplx* dst = g.col(k);
        for (int j = 0; j < f.ny(); ++j) dst[j] = w * src[j];
    }
    return g;
}

SpectralField dyadic_lowpass(const DyadicPartition& part, const SpectralField& f, int q) {
    SpectralField g(f.grid());
    for (int k = 0; k < f.nx(); ++k) {
        const double w = part.psi(q, k);
        if (w == 0.0) continue;
        const cplx* src = f.col(k);
        cplx* dst = g.col(k);
        for (int j = 0; j < f.ny(); ++j) dst[j] = w * src[j];
    }
    return g;
}

DyadicLadder dyadic_decompose(const DyadicPartition& part, const SpectralField& f) {
    if (!f.all_finite()) throw ValidationError("dyadic_decompose: field not finite");
    DyadicLadder lad;
    lad.q_min = part.q_min();
    lad.q_max = part.q_max();
    lad.blocks.reserve(part.n_blocks());
    for (int q = part.q_min(); q <= part.q_max(); ++q)
        lad.blocks.push_back(dyadic_block(part, f, q));
    // Below q_min every nonzero wavenumber is past the cutoff, so the low
    // part is exactly the horizontal mean column.
    lad.low_part = SpectralField(f.grid());
    for (int j = 0; j < f.ny(); ++j) lad.low_part.at(0, j) = f.at(0, j);
    return lad;
}

BonyParts bony_decompose(const DyadicPartition& part, FftEngine& fft,
                         const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid())) throw UsageError("bony_decompose: grid mismatch");
    BonyParts out{SpectralField(f.grid()), SpectralField(f.grid()), SpectralField(f.grid())};

    DyadicLadder lf = dyadic_decompose(part, f);
    DyadicLadder lg = dyadic_decompose(part, g);

    // Running low-passes S_{q-1}: start from the mean column and accumulate.
    SpectralField sf = lf.low_part;  // S_{q_min - 1} f
    SpectralField sg = lg.low_part;
    for (int q = part.q_min(); q <= part.q_max(); ++q) {
        out.t_fg += fft.multiply_dealiased(sf, lg.block(q));
        out.t_gf += fft.multiply_dealiased(sg, lf.block(q));
        if (q - 1 >= part.q_min()) {
            sf += lf.block(q - 1);
            sg += lg.block(q - 1);
        }
    }
    for (int q = part.q_min(); q <= part.q_max(); ++q) {
        SpectralField near = lf.block(q);
        if (q - 1 >= part.q_min()) near += lf.block(q - 1);
        if (q + 1 <= part.q_max()) near += lf.block(q + 1);
        out.remainder += fft.multiply_dealiased(near, lg.block(q));
    }
    // Mean x mean carry, so the three parts reconstruct f*g for any inputs.
    out.remainder += fft.multiply_dealiased(lf.low_part, lg.low_part);
    return out;
}

BernsteinReport bernstein_check(const DyadicPartition& part, FftEngine& fft,
                                const SpectralField& f, int q) {
    SpectralField bq = dyadic_block(part, f, q);
    BernsteinReport rep;
    const double l2 = bq.l2_norm();
    if (l2 < 1e-300) {
        rep.vacuous = true;
        return rep;
    }
    rep.deriv_ratio = bq.dx().l2_norm() / (std::ldexp(1.0, q) * l2);

    // || Delta_q f ||_{L2_h(Linf_v)}: sup over y per x, then L2 in x
    // (rectangle rule, exact for the periodic direction).
    std::vector<double> phys = fft.to_physical_unpadded(bq);
    const int nx = f.nx(), ny = f.ny();
    double s = 0.0;
    for (int i = 0; i < nx; ++i) {
        double m = 0.0;
        for (int j = 0; j < ny; ++j) m = std::max(m, std::abs(phys[static_cast<size_t>(i) * ny + j]));
        s += m * m;
    }
    const double l2h_linfv = std::sqrt(f.grid().period_L * s / nx);
    rep.linf_ratio = l2h_linfv / (std::pow(2.0, 0.5 * q) * l2);
    return rep;
}

}  // namespace stripmhd
