#include "stripmhd/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <future>
#include <thread>

#include <json.hpp>

#include "stripmhd/errors.hpp"

namespace stripmhd {

using nlohmann::json;

void SweepPlan::validate() const {
    if (epsilons.empty()) throw ConfigError("sweep: sweep.epsilons is empty");
    for (size_t i = 1; i < epsilons.size(); ++i)
        if (!(epsilons[i] < epsilons[i - 1]))
            throw ConfigError("sweep: epsilons must be strictly decreasing");
    for (double e : epsilons)
        if (!(e > 0.0 && e <= 1.0)) throw ConfigError("sweep: epsilons must lie in (0, 1]");
}

SweepResult run_sweep(const SweepPlan& plan) {
    plan.validate();
    SweepResult out;

    if (!plan.base.sweep_synthetic.empty()) {
        // test hook: bypass the runs, feed (eps, E) pairs straight to the fit
        for (const auto& [e, E] : plan.base.sweep_synthetic) {
            PairResult p;
            p.eps = e;
            p.E_sum = E;
            p.E_prod = E;
            out.entries.push_back(p);
        }
    } else {
        const int hw = static_cast<int>(std::thread::hardware_concurrency());
        const int workers =
            std::max(1, plan.threads > 0 ? plan.threads : (hw > 0 ? hw : 1));
        std::vector<std::future<PairResult>> futs;
        std::vector<PairResult> results(plan.epsilons.size());
        size_t next = 0;
        while (next < plan.epsilons.size() || !futs.empty()) {
            while (next < plan.epsilons.size() &&
                   futs.size() < static_cast<size_t>(workers)) {
                const double e = plan.epsilons[next++];
                futs.push_back(std::async(std::launch::async, [&, e] {
                    return run_convergence_pair(plan.base, e, plan.pair);
                }));
            }
            PairResult r = futs.front().get();
            futs.erase(futs.begin());
            for (size_t i = 0; i < plan.epsilons.size(); ++i)
                if (plan.epsilons[i] == r.eps) results[i] = std::move(r);
        }
        out.entries = std::move(results);
    }

    std::vector<std::pair<double, double>> pts;
    for (const PairResult& p : out.entries)
        if (p.healthy) pts.emplace_back(p.eps, p.E_sum);
    if (pts.size() >= 3) {
        out.fit = fit_rate(pts);
        out.fit_available = true;
    } else {
        out.fit_note = "fewer than 3 healthy entries; refusing the fit";
    }
    return out;
}

void SweepResult::write_csv(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("sweep: cannot open " + path);
    os << "epsilon,E_total,E_term_1,E_term_2,E_term_3,E_term_4,E_term_5,E_term_6,"
          "E_as_printed,healthy\n";
    char buf[64];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof buf, "%.17g%c", v, sep);
        os << buf;
    };
    for (const PairResult& p : entries) {
        put(p.eps, ',');
        put(p.E_sum, ',');
        for (int i = 1; i <= 6; ++i) {
            auto it = p.terms.find("E_term_" + std::to_string(i));
            put(it == p.terms.end() ? 0.0 : it->second, ',');
        }
        put(p.E_prod, ',');
        os << (p.healthy ? "1" : "0") << "\n";
    }
}

std::string SweepResult::fit_json() const {
    json j;
    if (fit_available) {
        j["slope"] = fit.slope;
        j["intercept"] = fit.intercept;
        j["r2"] = fit.r2;
        j["ci"] = fit.ci_halfwidth;
        j["entries_used"] = fit.entries_used;
        j["notes"] = fit.notes;
    } else {
        j["error"] = fit_note;
    }
    return j.dump(2);
}

}  // namespace stripmhd
