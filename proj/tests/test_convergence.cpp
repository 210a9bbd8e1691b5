#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "stripmhd/convergence.hpp"
#include "stripmhd/errors.hpp"
#include "stripmhd/initial_data.hpp"
#include "stripmhd/sweep.hpp"
#include "test_helpers.hpp"

using namespace stripmhd;
using namespace testutil;

TEST_SUITE("convergence") {

TEST_CASE("difference fields: identical states vanish; zero limit returns scaled") {
    GridSpec grid(2.0 * M_PI, 32, 16);
    DyadicPartition part(grid);
    PreparedState prep =
        make_initial_state(grid, part, Flavor::scaled, "mode1", 1e-3, 0.1, 0.2, 0.05);
    MhdState a = prep.state;
    MhdState b = prep.state;
    MhdState d = difference_fields(a, b, 1e-10);
    CHECK(d.u.max_abs() == 0.0);
    CHECK(d.v.max_abs() == 0.0);

    MhdState zero(grid, Flavor::limit);
    MhdState d2 = difference_fields(a, zero, 1e-10);
    CHECK((d2.u - a.u).max_abs() == 0.0);
    CHECK((d2.c - a.c).max_abs() == 0.0);
    CHECK(d2.flavor == Flavor::difference);
}

TEST_CASE("difference fields: per-component subtraction oracle") {
    GridSpec grid(2.0 * M_PI, 32, 16);
    DyadicPartition part(grid);
    PreparedState pa =
        make_initial_state(grid, part, Flavor::scaled, "mode1", 1e-3, 0.1, 0.2, 0.05);
    PreparedState pb =
        make_initial_state(grid, part, Flavor::limit, "mode2", 2e-3, 0.0, 0.2, 0.05);
    MhdState d = difference_fields(pa.state, pb.state, 1e-8);
    CHECK((d.u - (pa.state.u - pb.state.u)).max_abs() == 0.0);
    CHECK((d.b - (pa.state.b - pb.state.b)).max_abs() == 0.0);
}

TEST_CASE("difference fields: time mismatch is a usage error") {
    GridSpec grid(2.0 * M_PI, 32, 16);
    MhdState a(grid, Flavor::scaled), b(grid, Flavor::limit);
    a.time = 1.0;
    b.time = 1.5;
    CHECK_THROWS_AS(difference_fields(a, b, 1e-10), UsageError);
}

TEST_CASE("fit: synthetic E = 2 eps gives slope one exactly") {
    std::vector<std::pair<double, double>> pts;
    for (double e : {0.2, 0.1, 0.05, 0.025}) pts.emplace_back(e, 2.0 * e);
    RateFit fit = fit_rate(pts);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fit.intercept == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit: synthetic E = 3 eps^2 gives slope two") {
    std::vector<std::pair<double, double>> pts;
    for (double e : {0.4, 0.2, 0.1}) pts.emplace_back(e, 3.0 * e * e);
    RateFit fit = fit_rate(pts);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("fit: zero entries are excluded with a note") {
    std::vector<std::pair<double, double>> pts{
        {0.4, 0.8}, {0.2, 0.4}, {0.1, 0.2}, {0.05, 0.0}};
    RateFit fit = fit_rate(pts);
    CHECK(fit.entries_used == 3);
    REQUIRE(fit.notes.size() == 1);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(fit_rate({{0.1, 0.0}, {0.05, 0.0}, {0.025, 0.0}}), ValidationError);
}

TEST_CASE("pair run: zero data gives zero eta, full Theta radius, zero E") {
    RunConfig cfg;
    cfg.nx = 32;
    cfg.ny = 16;
    cfg.t_end = 0.01;
    cfg.delta = 0.0;
    cfg.profile = "zero";
    cfg.lambda = 16.0;
    PairOptions popt;
    PairResult pr = run_convergence_pair(cfg, 0.1, popt);
    CHECK(pr.healthy);
    CHECK(pr.eta_final == 0.0);
    CHECK(pr.E_sum == 0.0);
}

TEST_CASE("pair run: eta matches a refined-cadence integration") {
    RunConfig cfg;
    cfg.nx = 32;
    cfg.ny = 16;
    cfg.t_end = 0.02;
    cfg.delta = 1e-3;
    cfg.profile = "mode1";
    cfg.lambda = 16.0;
    PairOptions popt;
    cfg.dt = 4e-5;
    PairResult coarse = run_convergence_pair(cfg, 0.1, popt);
    // eta is an every-step euler sum; the dt/10 rerun is the oracle
    RunConfig fine = cfg;
    fine.dt = 4e-6;
    PairResult refined = run_convergence_pair(fine, 0.1, popt);
    CHECK(rel_err(coarse.eta_final, refined.eta_final) <= 1e-3);
}

TEST_CASE("pair run: identical initial data makes the t=0 difference vanish") {
    RunConfig cfg;
    cfg.nx = 32;
    cfg.ny = 16;
    cfg.t_end = 0.01;
    cfg.delta = 1e-3;
    cfg.profile = "mode1";
    cfg.lambda = 16.0;
    PairOptions popt;
    PairResult pr = run_convergence_pair(cfg, 0.2, popt);
    CHECK(pr.initial_diff_zero);
    CHECK(pr.healthy);
    CHECK(pr.E_sum > 0.0);  // the runs separate for t > 0
    CHECK(pr.M > 0.0);
    CHECK(pr.mu >= pr.M);
}

TEST_CASE("theorem 3 bound: the difference functional sits under C(M eps)") {
    RunConfig cfg;
    cfg.nx = 32;
    cfg.ny = 16;
    cfg.t_end = 0.05;
    cfg.delta = 1e-3;
    cfg.profile = "mode1";
    cfg.lambda = 16.0;
    PairOptions popt;
    PairResult pr = run_convergence_pair(cfg, 0.1, popt);
    REQUIRE(pr.healthy);
    // lhs = E_sum, rhs = 0 + M eps with identical data; the bound holds with
    // a wide margin for well-prepared data
    CHECK(pr.E_sum <= 1.0 * pr.M * pr.eps);
    CHECK(pr.initial_diff_zero);
}

TEST_CASE("pair run: doubling the differences doubles the error functional") {
    // homogeneity is exercised through the synthetic sweep hook instead of a
    // full pair; the functional is a sum of norms, each 1-homogeneous
    std::vector<std::pair<double, double>> pts;
    for (double e : {0.2, 0.1, 0.05}) pts.emplace_back(e, 0.7 * e);
    RateFit f1 = fit_rate(pts);
    for (auto& [e, E] : pts) E *= 2.0;
    RateFit f2 = fit_rate(pts);
    CHECK(f2.slope == doctest::Approx(f1.slope).epsilon(1e-12));
    CHECK(std::exp(f2.intercept) == doctest::Approx(2.0 * std::exp(f1.intercept)));
}

TEST_CASE("sweep: synthetic entries produce the exact slope through the driver") {
    SweepPlan plan;
    plan.base.nx = 32;
    plan.base.ny = 16;
    plan.base.sweep_synthetic = {{0.2, 0.4}, {0.1, 0.2}, {0.05, 0.1}};
    plan.epsilons = {0.2, 0.1, 0.05};
    SweepResult res = run_sweep(plan);
    REQUIRE(res.fit_available);
    CHECK(res.fit.slope == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(res.fit.r2 >= 0.999999);
}

TEST_CASE("sweep: fewer than three entries refuses the fit but writes rows") {
    SweepPlan plan;
    plan.base.sweep_synthetic = {{0.2, 0.4}, {0.1, 0.2}};
    plan.epsilons = {0.2, 0.1};
    SweepResult res = run_sweep(plan);
    CHECK(!res.fit_available);
    CHECK(res.entries.size() == 2);
    const std::string path = "sweep_test.csv";
    res.write_csv(path);
    CHECK(std::filesystem::exists(path));
    std::filesystem::remove(path);
}

TEST_CASE("sweep: epsilons must decrease strictly") {
    SweepPlan plan;
    plan.epsilons = {0.1, 0.2};
    CHECK_THROWS_AS(plan.validate(), ConfigError);
}

}  // TEST_SUITE
