#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "superint/integrate.hpp"

using namespace superint;
using namespace superint::classical;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ClosureResult run_closure(const ModelSpec& m, const PhaseState& s0,
                          double periods = 6.0, double tol = 1e-10,
                          double closure_tol = 1e-6) {
    const double t_end = periods * characteristic_period(m, s0);
    const auto traj = integrate_trajectory(m, s0, t_end, tol, 512);
    return detect_closure(traj, closure_tol);
}

}  // namespace

TEST_CASE("flat oscillator closes after one period 2 pi / omega") {
    const auto m = ModelSpec::darboux3(0.0, 1.0, 2);
    const PhaseState s0({1.0, 0.3}, {0.2, -0.5});
    const auto res = run_closure(m, s0);
    REQUIRE(res.verdict == ClosureResult::Verdict::Closed);
    CHECK(res.period == doctest::Approx(kTwoPi).epsilon(1e-6));
    CHECK(res.mismatch < 1e-6);
}

TEST_CASE("flat Kepler orbit reproduces the third-law period") {
    const auto m = ModelSpec::taubnut(0.0, 1.0, 3);
    const PhaseState s0({1.0, 0.0, 0.0}, {0.0, 0.9, 0.0});
    const double e = hamiltonian(m, s0);
    REQUIRE(e < 0.0);
    const double period = kTwoPi * m.k / std::pow(2.0 * std::fabs(e), 1.5);
    const auto res = run_closure(m, s0);
    REQUIRE(res.verdict == ClosureResult::Verdict::Closed);
    CHECK(res.period == doctest::Approx(period).epsilon(1e-6));
}

TEST_CASE("energy drift stays within 10x the integrator tolerance") {
    const auto m = ModelSpec::darboux3(0.05, 1.0, 3);
    const PhaseState s0({1.0, 0.0, 0.2}, {0.0, 0.8, 0.1});
    const double tol = 1e-10;
    const auto traj = integrate_trajectory(m, s0, 100.0, tol, 1024);
    REQUIRE(traj.complete);
    CHECK(traj.ledger_drift(0) <= 10.0 * tol);  // ledger[0] is H
}

TEST_CASE("bounded orbits close for all four families with conserved ledgers") {
    const double tol = 1e-10;
    struct Case {
        ModelSpec model;
        PhaseState s0;
    };
    const Case cases[] = {
        {ModelSpec::darboux3(0.05, 1.0, 3),
         PhaseState({1.0, 0.0, 0.0}, {0.0, 0.8, 0.0})},
        {ModelSpec::taubnut(0.5, 1.0, 3),
         PhaseState({1.0, 0.0, 0.0}, {0.0, 0.7, 0.0})},
        {ModelSpec::darboux3xi(0.05, 0.01, 1.0, 3),
         PhaseState({0.8, 0.0, 0.0}, {0.0, 0.7, 0.0})},
        {ModelSpec::darboux4(0.3, 0.02, 1.0, 3),
         PhaseState({1.0, 0.0, 0.0}, {0.0, 0.5, 0.0})},
    };
    for (const auto& c : cases) {
        CAPTURE(c.model.describe());
        const double t_end = 50.0 * characteristic_period(c.model, c.s0);
        const auto traj = integrate_trajectory(c.model, c.s0, t_end, tol, 2048);
        REQUIRE(traj.complete);
        CHECK(traj.max_ledger_drift() <= 10.0 * tol);
        const auto res = detect_closure(traj, 1e-6);
        CHECK(res.verdict == ClosureResult::Verdict::Closed);
    }
}

TEST_CASE("unbound Kepler energy is flagged unbounded") {
    const auto m = ModelSpec::taubnut(0.0, 1.0, 3);
    const PhaseState s0({1.0, 0.0, 0.0}, {0.0, 2.0, 0.0});  // E = 1 > 0
    const auto traj = integrate_trajectory(m, s0, 200.0, 1e-8, 512);
    const auto res = detect_closure(traj, 1e-6);
    CHECK(res.verdict == ClosureResult::Verdict::Unbounded);
}

TEST_CASE("radial plunge into the Coulomb center yields a flagged partial run") {
    const auto m = ModelSpec::taubnut(0.0, 1.0, 3);
    const PhaseState s0({1.0, 0.0, 0.0}, {-0.5, 0.0, 0.0});
    const auto traj = integrate_trajectory(m, s0, 50.0, 1e-10, 256);
    CHECK_FALSE(traj.complete);
    CHECK_FALSE(traj.diagnostic.empty());
    CHECK(traj.times.back() < 50.0);
}

TEST_CASE("dense output interpolates between accepted steps") {
    const auto m = ModelSpec::darboux3(0.0, 1.0, 2);
    const PhaseState s0({1.0, 0.0}, {0.0, 0.0});
    const auto sol = integrate_dense(m, s0, 10.0, {});
    REQUIRE(sol.complete());
    // Exact solution q1 = cos t for the unit flat oscillator.
    for (double t : {0.37, 1.94, 4.03, 7.77, 9.99}) {
        const auto s = sol.eval(t);
        CHECK(s.q[0] == doctest::Approx(std::cos(t)).epsilon(1e-9));
        CHECK(s.p[0] == doctest::Approx(-std::sin(t)).epsilon(1e-9));
    }
}
