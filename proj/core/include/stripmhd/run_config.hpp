#pragma once

#include <string>
#include <vector>

#include "stripmhd/state.hpp"

namespace stripmhd {

/// Resolved run configuration. JSON schema (all keys optional unless noted):
///   grid.{L, nx, ny}            nx required power of two, ny required
///   run.{dt, t_end, R, a, lambda, epsilon, c1}
///   data.{delta, profile}
///   switches.{nonlinear, magnetic}
///   output.{record_every, snapshot_every}
///   sweep.{epsilons, t_end, synthetic}
/// Unknown keys are a configuration error listing every offender.
struct RunConfig {
    double L = 2.0 * 3.14159265358979323846;
    int nx = 64;
    int ny = 32;

    double dt = 0.0;     // 0: auto from the CFL-style bound
    double t_end = 1.0;
    double R = 1.0;      // Poincare-rate constant used by the monitors
    double a = 0.2;      // initial analyticity radius
    double lambda = 0.0; // 0: from calibration (4 C^2), fallback C = 4
    double epsilon = 0.0;  // 0: limit run; > 0: scaled run
    double c1 = 0.05;    // smallness threshold coefficient (|data| <= c1 a)

    double delta = 1e-3;
    std::string profile = "mode1";

    bool nonlinear = true;
    bool magnetic = true;

    int record_every = 0;    // 0: auto (~1500 samples)
    int snapshot_every = 0;  // 0: none

    std::vector<double> sweep_epsilons;
    double sweep_t_end = 0.0;  // 0: use run.t_end
    std::vector<std::pair<double, double>> sweep_synthetic;  // test hook (eps, E)

    Flavor flavor() const { return epsilon > 0.0 ? Flavor::scaled : Flavor::limit; }
    double lambda_effective() const { return lambda > 0.0 ? lambda : 4.0 * 4.0 * 4.0; }
};

RunConfig parse_config_text(const std::string& json_text);
RunConfig parse_config_file(const std::string& path);
std::string config_to_json(const RunConfig& cfg);

}  // namespace stripmhd
