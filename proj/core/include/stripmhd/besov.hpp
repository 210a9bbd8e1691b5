#pragma once

#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stripmhd/dyadic.hpp"
#include "stripmhd/spectral_field.hpp"

namespace stripmhd {

/// ||Delta_q f||_{L2(S)} for every tabulated block, computed from per-column
/// energies: ||Delta_q f||^2 = sum_k phi(2^{-q}|k|)^2 E_k.
std::vector<double> block_l2_norms(const DyadicPartition& part,
                                   std::span<const double> col_energies);
std::vector<double> block_l2_norms(const DyadicPartition& part, const SpectralField& f);

/// B^s norm, Sum_q 2^{qs} ||Delta_q f||_{L2}. For s in (m-1/2, m+1/2], m >= 1,
/// evaluates the norm of d_x^m f at s - m (the homogeneous sum is used in all
/// regimes). Supported range s in [-2, 3]. A nonzero horizontal mean is a
/// validation error when s <= 1/2.
double besov_norm(const DyadicPartition& part, const SpectralField& f, double s);

/// Same, on per-column energies (no mean validation; the k = 0 column never
/// contributes). `col_abs_k` are the |k| values per column.
double besov_norm_from_energies(const DyadicPartition& part,
                                std::span<const double> col_energies, double s);

/// Number of x-derivatives Definition-style evaluation takes at order s.
int besov_dx_order(double s);

/// Time-stamped scalar records keyed by tag. Serializes to CSV rows
/// (time, tag, value).
class NormSeries {
public:
    void append_time(double t);
    void set(const std::string& tag, double value);          // at the last time
    bool has(const std::string& tag) const;
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& column(const std::string& tag) const;
    std::vector<std::string> tags() const;
    size_t n_samples() const { return times_.size(); }

    void write_csv(const std::string& path, const std::string& metadata_comment = "") const;
    static NormSeries read_csv(const std::string& path);

private:
    std::vector<double> times_;
    std::vector<std::string> order_;
    std::unordered_map<std::string, std::vector<double>> cols_;
};

constexpr double kPinf = -1.0;  // marker for p = infinity

/// Chemin-Lerner aggregate over recorded block norms:
///   Sum_q 2^{qs} ( integral_0^T w(t) (g(t) ||Delta_q u(t)||)^p dt )^{1/p},
/// trapezoid in time, running max when p = infinity (w ignored there).
/// `blocks[i][q - q_min]` are the recorded block norms at times[i].
double chemin_lerner_aggregate(std::span<const double> times,
                               const std::vector<std::vector<double>>& blocks,
                               int q_min, double p, double s, double T,
                               const std::function<double(double)>& mult = {},
                               const std::function<double(double)>& weight = {});

/// Convenience: build the block series from field snapshots, then aggregate.
double chemin_lerner_norm(const DyadicPartition& part,
                          std::span<const SpectralField> fields,
                          std::span<const double> times, double p, double s, double T,
                          const std::function<double(double)>& mult = {});

/// Definition 2.3: nonnegative time weight f(t) multiplying the integrand.
double weighted_cl_norm(const DyadicPartition& part,
                        std::span<const SpectralField> fields,
                        std::span<const double> times,
                        std::span<const double> weight_series, double p, double s,
                        double T, const std::function<double(double)>& mult = {});

}  // namespace stripmhd
