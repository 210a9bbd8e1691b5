#include "stripmhd/besov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stripmhd/errors.hpp"

namespace stripmhd {

std::vector<double> block_l2_norms(const DyadicPartition& part,
                                   std::span<const double> col_energies) {
    const GridSpec& g = part.grid();
    std::vector<double> out(part.n_blocks(), 0.0);
    for (int q = part.q_min(); q <= part.q_max(); ++q) {
        double s = 0.0;
        for (int k = 0; k < g.nx; ++k) {
            const double w = part.phi(q, k);
            if (w != 0.0) s += w * w * col_energies[k];
        }
        out[static_cast<size_t>(q - part.q_min())] = std::sqrt(s);
    }
    return out;
}

std::vector<double> block_l2_norms(const DyadicPartition& part, const SpectralField& f) {
    return block_l2_norms(part, f.col_energies());
}

int besov_dx_order(double s) {
    if (s <= 0.5) return 0;
    return static_cast<int>(std::ceil(s - 0.5));
}

double besov_norm_from_energies(const DyadicPartition& part,
                                std::span<const double> col_energies, double s) {
    if (s < -2.0 || s > 3.0) throw ValidationError("besov_norm: s outside supported [-2, 3]");
    const GridSpec& g = part.grid();
    const int m = besov_dx_order(s);
    const double seff = s - m;
    std::vector<double> e(col_energies.begin(), col_energies.end());
    if (m > 0)
        for (int k = 0; k < g.nx; ++k) {
            const double ak = g.abs_wavenumber(k);
            e[k] *= std::pow(ak * ak, m);
        }
    std::vector<double> bn = block_l2_norms(part, e);
    double total = 0.0;
    for (int q = part.q_min(); q <= part.q_max(); ++q)
        total += std::pow(2.0, seff * q) * bn[static_cast<size_t>(q - part.q_min())];
    return total;
}

double besov_norm(const DyadicPartition& part, const SpectralField& f, double s) {
    if (s <= 0.5) {
        const double scale = f.max_abs();
        if (f.x_mean_abs_max() > 1e-12 * scale && scale > 0.0)
            throw ValidationError("besov_norm: nonzero horizontal mean with s <= 1/2");
    }
    return besov_norm_from_energies(part, f.col_energies(), s);
}

// ---------------------------------------------------------------- NormSeries

void NormSeries::append_time(double t) {
    if (!times_.empty() && !(t > times_.back()))
        throw ValidationError("NormSeries: times must be strictly increasing");
    times_.push_back(t);
    for (auto& [tag, col] : cols_) col.resize(times_.size(), 0.0);
}

void NormSeries::set(const std::string& tag, double value) {
    if (times_.empty()) throw UsageError("NormSeries: append_time before set");
    if (!(value >= 0.0) || !std::isfinite(value))
        throw ValidationError("NormSeries: entries must be finite and nonnegative (tag " + tag + ")");
    auto it = cols_.find(tag);
    if (it == cols_.end()) {
        order_.push_back(tag);
        it = cols_.emplace(tag, std::vector<double>(times_.size(), 0.0)).first;
    }
    it->second.resize(times_.size(), 0.0);
    it->second.back() = value;
}

bool NormSeries::has(const std::string& tag) const { return cols_.count(tag) != 0; }

const std::vector<double>& NormSeries::column(const std::string& tag) const {
    auto it = cols_.find(tag);
    if (it == cols_.end()) throw RangeError("NormSeries: unknown tag " + tag);
    return it->second;
}

std::vector<std::string> NormSeries::tags() const { return order_; }

void NormSeries::write_csv(const std::string& path, const std::string& metadata_comment) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("NormSeries: cannot open " + path);
    if (!metadata_comment.empty()) os << "# " << metadata_comment << "\n";
    os << "time,tag,value\n";
    char buf[64];
    for (size_t i = 0; i < times_.size(); ++i) {
        for (const std::string& tag : order_) {
            const auto& col = cols_.at(tag);
            std::snprintf(buf, sizeof buf, "%.17g", times_[i]);
            os << buf << ',' << tag << ',';
            std::snprintf(buf, sizeof buf, "%.17g", i < col.size() ? col[i] : 0.0);
            os << buf << '\n';
        }
    }
}

NormSeries NormSeries::read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw UsageError("NormSeries: cannot open " + path);
    NormSeries ns;
    std::string line;
    double last_t = 0.0;
    bool have_t = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("time,", 0) == 0) continue;
        std::istringstream ls(line);
        std::string tstr, tag, vstr;
        if (!std::getline(ls, tstr, ',') || !std::getline(ls, tag, ',') ||
            !std::getline(ls, vstr))
            continue;
        const double t = std::stod(tstr);
        const double v = std::stod(vstr);
        if (!have_t || t > last_t) {
            ns.append_time(t);
            last_t = t;
            have_t = true;
        }
        ns.set(tag, v);
    }
    return ns;
}

// ------------------------------------------------------------ Chemin-Lerner

double chemin_lerner_aggregate(std::span<const double> times,
                               const std::vector<std::vector<double>>& blocks,
                               int q_min, double p, double s, double T,
                               const std::function<double(double)>& mult,
                               const std::function<double(double)>& weight) {
    if (times.empty()) throw RangeError("chemin_lerner: empty series");
    if (blocks.size() != times.size()) throw UsageError("chemin_lerner: size mismatch");
    const double t_end = times.back();
    if (T > t_end * (1.0 + 1e-12) + 1e-300)
        throw RangeError("chemin_lerner: T beyond recorded horizon");
    T = std::min(T, t_end);
    const size_t nq = blocks.front().size();

    auto g_at = [&](size_t i) { return mult ? mult(times[i]) : 1.0; };
    auto w_at = [&](size_t i) { return weight ? weight(times[i]) : 1.0; };

    double total = 0.0;
    for (size_t qi = 0; qi < nq; ++qi) {
        double agg;
        if (p == kPinf) {
            agg = 0.0;
            for (size_t i = 0; i < times.size() && times[i] <= T * (1 + 1e-15); ++i)
                agg = std::max(agg, g_at(i) * blocks[i][qi]);
        } else {
            // trapezoid of w(t) * (g(t) * n_q(t))^p up to T
            auto integrand = [&](size_t i) {
                const double v = g_at(i) * blocks[i][qi];
                return w_at(i) * std::pow(v, p);
            };
            double acc = 0.0;
            size_t i = 1;
            for (; i < times.size() && times[i] <= T * (1 + 1e-15); ++i)
                acc += 0.5 * (integrand(i - 1) + integrand(i)) * (times[i] - times[i - 1]);
            if (i < times.size() && times[i - 1] < T) {
                // partial last interval, linear in the integrand
                const double f0 = integrand(i - 1), f1 = integrand(i);
                const double a = (T - times[i - 1]) / (times[i] - times[i - 1]);
                const double fT = (1.0 - a) * f0 + a * f1;
                acc += 0.5 * (f0 + fT) * (T - times[i - 1]);
            }
            agg = std::pow(acc, 1.0 / p);
        }
        total += std::pow(2.0, s * (q_min + static_cast<int>(qi))) * agg;
    }
    return total;
}

namespace {
std::vector<std::vector<double>> block_rows(const DyadicPartition& part,
                                            std::span<const SpectralField> fields,
                                            double s) {
    const int m = besov_dx_order(s);
    std::vector<std::vector<double>> rows;
    rows.reserve(fields.size());
    for (const SpectralField& f : fields) {
        std::vector<double> e = f.col_energies();
        if (m > 0)
            for (int k = 0; k < part.grid().nx; ++k) {
                const double ak = part.grid().abs_wavenumber(k);
                e[k] *= std::pow(ak * ak, m);
            }
        rows.push_back(block_l2_norms(part, e));
    }
    return rows;
}
}  // namespace

double chemin_lerner_norm(const DyadicPartition& part, std::span<const SpectralField> fields,
                          std::span<const double> times, double p, double s, double T,
                          const std::function<double(double)>& mult) {
    auto rows = block_rows(part, fields, s);
    return chemin_lerner_aggregate(times, rows, part.q_min(), p, s - besov_dx_order(s), T,
                                   mult);
}

double weighted_cl_norm(const DyadicPartition& part, std::span<const SpectralField> fields,
                        std::span<const double> times, std::span<const double> weight_series,
                        double p, double s, double T,
                        const std::function<double(double)>& mult) {
    if (weight_series.size() != times.size())
        throw UsageError("weighted_cl_norm: weight series must share the time grid");
    for (double w : weight_series)
        if (w < 0.0) throw ValidationError("weighted_cl_norm: weight must be nonnegative");
    auto rows = block_rows(part, fields, s);
    std::vector<double> ts(times.begin(), times.end());
    std::vector<double> ws(weight_series.begin(), weight_series.end());
    auto weight = [ts, ws](double t) {
        // recorded samples are queried at their own stamps; interpolate between
        auto it = std::lower_bound(ts.begin(), ts.end(), t);
        if (it == ts.begin()) return ws.front();
        if (it == ts.end()) return ws.back();
        const size_t hi = static_cast<size_t>(it - ts.begin());
        const double a = (t - ts[hi - 1]) / (ts[hi] - ts[hi - 1]);
        return (1.0 - a) * ws[hi - 1] + a * ws[hi];
    };
    return chemin_lerner_aggregate(times, rows, part.q_min(), p, s - besov_dx_order(s), T,
                                   mult, weight);
}

}  // namespace stripmhd
