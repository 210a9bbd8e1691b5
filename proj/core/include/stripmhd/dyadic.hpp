#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stripmhd/fft.hpp"
#include "stripmhd/spectral_field.hpp"

namespace stripmhd {

/// Smoothed step: C^inf, identically 1 on [0, 3/4], identically 0 on
/// [4/3, inf), strictly monotone in between. phi(z) = step(z/2) - step(z)
/// is then supported on exactly [3/4, 8/3] and the dyadic family
/// phi(2^{-q} z) telescopes to 1 for every z > 0.
double lp_step(double z);

/// Tabulated dyadic cutoffs on a grid's wavenumbers. Immutable once built;
/// safe to share across threads.
class DyadicPartition {
public:
    /// q-range defaults to one that covers all nonzero grid wavenumbers with
    /// margin: q_min = min(-2, floor(log2 k_min) - 1), q_max = ceil(log2 k_max) + 2.
    explicit DyadicPartition(const GridSpec& grid);
    DyadicPartition(const GridSpec& grid, int q_min, int q_max);

    const GridSpec& grid() const { return grid_; }
    int q_min() const { return q_min_; }
    int q_max() const { return q_max_; }
    int n_blocks() const { return q_max_ - q_min_ + 1; }

    /// phi(2^{-q} |k|) for FFT slot kidx.
    double phi(int q, int kidx) const { return phi_[static_cast<size_t>(q - q_min_) * grid_.nx + kidx]; }
    /// Low-pass weight step(2^{-q} |k|); S_q f = F^{-1}(psi_q * fhat).
    double psi(int q, int kidx) const;

    /// sum_q phi(2^{-q}|k|) over the tabulated range (1 for k != 0).
    double partition_sum(int kidx) const;

    /// Blocks that can touch wavenumber magnitude z: (3/4) 2^q <= z <= (8/3) 2^q.
    std::pair<int, int> blocks_covering(double z) const;

private:
    void build();
    GridSpec grid_;
    int q_min_, q_max_;
    std::vector<double> phi_;  // [(q - q_min) * nx + kidx]
};

/// One field split into its dyadic blocks plus the low (horizontal-mean)
/// part: low + sum_q block_q reconstructs the field to roundoff.
struct DyadicLadder {
    int q_min = 0;
    int q_max = -1;
    std::vector<SpectralField> blocks;  // indexed q - q_min
    SpectralField low_part;

    const SpectralField& block(int q) const { return blocks[static_cast<size_t>(q - q_min)]; }
};

/// Delta_q f as a field (single block).
SpectralField dyadic_block(const DyadicPartition& part, const SpectralField& f, int q);

/// S_q f = low-pass below block q.
SpectralField dyadic_lowpass(const DyadicPartition& part, const SpectralField& f, int q);

DyadicLadder dyadic_decompose(const DyadicPartition& part, const SpectralField& f);

/// Bony paraproduct split of the de-aliased product f*g:
///   T_f g = sum_q S_{q-1} f Delta_q g,  T_g f symmetric,
///   R(f,g) = sum_{|q-q'|<=1} Delta_{q'} f Delta_q g  (+ mean*mean carry).
/// The three parts sum to multiply_dealiased(f, g) exactly by bilinearity.
struct BonyParts {
    SpectralField t_fg;
    SpectralField t_gf;
    SpectralField remainder;
};
BonyParts bony_decompose(const DyadicPartition& part, FftEngine& fft,
                         const SpectralField& f, const SpectralField& g);

/// Two-sided Bernstein ratios for a block-q field.
struct BernsteinReport {
    bool vacuous = false;
    double deriv_ratio = 0.0;    // ||dx Delta_q f|| / (2^q ||Delta_q f||)
    double linf_ratio = 0.0;     // ||Delta_q f||_{L2_h(Linf_v)} / (2^{q/2} ||Delta_q f||)
    bool within(double C) const {
        return vacuous || (deriv_ratio >= 1.0 / C && deriv_ratio <= C &&
                           linf_ratio >= 1.0 / C && linf_ratio <= C);
    }
};
BernsteinReport bernstein_check(const DyadicPartition& part, FftEngine& fft,
                                const SpectralField& f, int q);

}  // namespace stripmhd
