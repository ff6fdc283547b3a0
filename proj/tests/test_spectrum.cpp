#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "superint/spectrum.hpp"

using namespace superint;
using namespace superint::spectrum;

namespace {

// Printed factorial-ratio forms of the degeneracy counters, evaluated in
// floating point through lgamma: an independent route to the exact-integer
// implementation.
double harmonic_count_lgamma(int n, int l) {
    if (n == 2 && l == 0) return 1.0;
    return (2.0 * l + n - 2) *
           std::exp(std::lgamma(l + n - 2.0) - std::lgamma(l + 1.0) -
                    std::lgamma(n - 1.0));
}

double coulomb_degeneracy_lgamma(int n, int nn) {
    return (2.0 * nn + n - 1) *
           std::exp(std::lgamma(nn + n - 1.0) - std::lgamma(nn + 1.0) -
                    std::lgamma(static_cast<double>(n)));
}

int radial_zero_count(double eta, int n, int l, double r_hi) {
    int changes = 0;
    double prev = coulomb_radial_eigenfunction(eta, 1.0, 1.0, 3, n, l, 1e-6);
    for (int i = 1; i <= 6000; ++i) {
        const double r = r_hi * i / 6000.0;
        const double cur = coulomb_radial_eigenfunction(eta, 1.0, 1.0, 3, n, l, r);
        if (prev != 0.0 && cur != 0.0 && std::signbit(prev) != std::signbit(cur))
            ++changes;
        if (cur != 0.0) prev = cur;
    }
    return changes;
}

}  // namespace

TEST_CASE("oscillator spectrum reproduces the reference values") {
    const double expected_e0[] = {1.5, 1.48, 1.46, 1.41};
    const double expected_thr[] = {std::numeric_limits<double>::infinity(), 50.0,
                                   25.0, 12.5};
    const double lambdas[] = {0.0, 0.01, 0.02, 0.04};
    for (int i = 0; i < 4; ++i) {
        const auto lv = oscillator_energy(lambdas[i], 1.0, 1.0, 3, 0);
        CHECK(std::fabs(lv.energy - expected_e0[i]) <= 0.005);  // 2 decimals
        if (std::isinf(expected_thr[i]))
            CHECK(std::isinf(lv.threshold));
        else
            CHECK(lv.threshold ==
                  doctest::Approx(expected_thr[i]).epsilon(1e-12));
    }
}

TEST_CASE("flat oscillator level formula at lambda = 0") {
    for (int n : {0, 1, 5, 40})
        for (int dim : {2, 3, 5})
            CHECK(oscillator_energy(0.0, 1.7, 0.9, dim, n).energy ==
                  doctest::Approx(0.9 * 1.7 * (n + 0.5 * dim)).epsilon(1e-15));
}

TEST_CASE("deformed frequency closes the level formula: E = hbar Omega (n+N/2)") {
    for (double lambda : {0.01, 0.3, 2.0})
        for (int n : {0, 3, 17})
            for (int dim : {2, 3, 4}) {
                const auto lv = oscillator_energy(lambda, 1.1, 0.7, dim, n);
                CHECK(lv.energy ==
                      doctest::Approx(0.7 * lv.omega_deformed * (n + 0.5 * dim))
                          .epsilon(1e-12));
            }
}

TEST_CASE("oscillator spectrum is increasing, bounded and accumulates") {
    std::mt19937_64 rng(5);
    auto unif = [&](double a, double b) {
        return a + (b - a) * (static_cast<double>(rng() >> 11) * 0x1p-53);
    };
    for (int draw = 0; draw < 20; ++draw) {
        const double lambda = unif(1e-3, 0.5);
        const double omega = unif(0.5, 2.0);
        const double hbar = unif(0.5, 2.0);
        const int dim = 2 + static_cast<int>(rng() % 3);
        double prev = 0.0, prev_gap = -1.0;
        bool increasing = true, bounded = true, gaps_shrink = true;
        const double thr = omega * omega / (2.0 * lambda);
        for (int n = 0; n <= 10000; ++n) {
            const double e = oscillator_energy(lambda, omega, hbar, dim, n).energy;
            if (n > 0) {
                increasing &= e > prev;
                const double gap = e - prev;
                // Allow a few ulps of slack: near the accumulation point the
                // gaps fall below the representable spacing of E itself.
                if (n > 200)
                    gaps_shrink &= gap <= prev_gap +
                                       8 * std::numeric_limits<double>::epsilon() * e;
                prev_gap = gap;
            }
            bounded &= e > 0.0 && e < thr;
            prev = e;
        }
        CHECK(increasing);
        CHECK(bounded);
        CHECK(gaps_shrink);
        // The gap closes: accumulation at the continuum edge.
        const double tail_gap =
            oscillator_energy(lambda, omega, hbar, dim, 10000).energy -
            oscillator_energy(lambda, omega, hbar, dim, 9999).energy;
        CHECK(tail_gap < 1e-4 * thr);
    }
}

TEST_CASE("oscillator limit lambda -> 0 recovers flat levels to 1e-8") {
    for (int n : {0, 2, 9})
        CHECK(std::fabs(oscillator_energy(1e-12, 1.0, 1.0, 3, n).energy -
                        (n + 1.5)) <= 1e-8);
}

TEST_CASE("oscillator eigenfunction: Gaussian limit and parity") {
    const std::vector<int> gs{0, 0, 0};
    const std::vector<double> pt{0.4, -0.7, 1.1};
    // lambda = 0, n = 0: proportional to exp(-omega q^2 / (2 hbar)).
    double q2 = 0.0;
    for (double v : pt) q2 += v * v;
    const double ratio =
        oscillator_eigenfunction(0.0, 1.3, 0.9, gs, pt) /
        std::exp(-0.5 * (1.3 / 0.9) * q2);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-12));

    const std::vector<int> idx{2, 1, 3};  // n = 6
    std::vector<double> neg(pt);
    for (double& v : neg) v = -v;
    CHECK(oscillator_eigenfunction(0.08, 1.0, 1.0, idx, neg) ==
          doctest::Approx(oscillator_eigenfunction(0.08, 1.0, 1.0, idx, pt))
              .epsilon(1e-12));  // (-1)^6 = +1
    const std::vector<int> odd{1, 0, 2};  // n = 3
    CHECK(oscillator_eigenfunction(0.08, 1.0, 1.0, odd, neg) ==
          doctest::Approx(-oscillator_eigenfunction(0.08, 1.0, 1.0, odd, pt))
              .epsilon(1e-12));
}

TEST_CASE("Coulomb spectrum: hydrogen limit, pinned value, K identity") {
    // eta = 0 equals -k^2 / (2 hbar^2 M^2) for all nn <= 20, N in {2,3,4}.
    for (int dim : {2, 3, 4})
        for (int nn = 0; nn <= 20; ++nn)
            for (int l = 0; l <= nn; ++l) {
                const double m = nn - l + l + 0.5 * (dim - 1);
                CHECK(coulomb_energy(0.0, 1.3, 0.8, dim, nn - l, l).energy ==
                      doctest::Approx(-1.69 / (2 * 0.64 * m * m))
                          .epsilon(1e-12));
            }

    // eta=1, N=3, n=l=0, hbar=k=1: E = -1/(2+sqrt(3)).
    CHECK(coulomb_energy(1.0, 1.0, 1.0, 3, 0, 0).energy ==
          doctest::Approx(-1.0 / (2.0 + std::sqrt(3.0))).epsilon(1e-14));

    // Deformed coupling closes the hydrogenic formula E = -K^2/(2 hbar^2 M^2).
    for (double eta : {0.2, 0.7, 1.5})
        for (int n : {0, 1})
            for (int l : {0, 2}) {
                const auto lv = coulomb_energy(eta, 1.2, 0.9, 3, n, l);
                const double m = n + l + 1.0;
                CHECK(lv.energy ==
                      doctest::Approx(-lv.coupling_deformed *
                                      lv.coupling_deformed /
                                      (2 * 0.81 * m * m))
                          .epsilon(1e-12));
            }
}

TEST_CASE("Coulomb energies depend on (n, l) only through the sum") {
    for (double eta : {0.3, 1.0})
        for (int nn : {1, 2, 3, 5}) {
            const double ref = coulomb_energy(eta, 1.0, 1.0, 3, nn, 0).energy;
            for (int l = 1; l <= nn; ++l)
                CHECK(coulomb_energy(eta, 1.0, 1.0, 3, nn - l, l).energy == ref);
        }
}

TEST_CASE("Coulomb accumulation at zero and limit recovery") {
    double prev = -1e9;
    for (int nn = 0; nn <= 200; ++nn) {
        const double e = coulomb_energy(0.6, 1.0, 1.0, 3, nn, 0).energy;
        CHECK(e < 0.0);
        CHECK(e > prev);
        prev = e;
    }
    CHECK(prev > -1e-4);  // approaching the continuum edge at 0

    for (int nn : {0, 1, 7})
        CHECK(std::fabs(coulomb_energy(1e-12, 1.0, 1.0, 3, nn, 0).energy -
                        (-0.5 / ((nn + 1.0) * (nn + 1.0)))) <= 1e-8);
}

TEST_CASE("Coulomb radial eigenfunction: hydrogen shape and node counts") {
    // eta = 0, n = l = 0, N = 3: proportional to exp(-k r / hbar^2).
    for (double r : {0.3, 1.0, 2.7}) {
        const double ratio = coulomb_radial_eigenfunction(0.0, 1.0, 1.0, 3, 0, 0, r) /
                             std::exp(-r);
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (int n : {0, 1, 2, 4})
        for (int l : {0, 1}) {
            const double r_hi = 15.0 * (n + l + 1.0) * (n + l + 1.0);
            CHECK(radial_zero_count(0.5, n, l, r_hi) == n);
        }
}

TEST_CASE("perturbative series coefficients and Taylor remainder") {
    // Printed coefficients.
    const auto s = coulomb_perturbative(1.0, 1.0, 3, 0, 0, 2);
    CHECK(s.c0 == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(s.c1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.c2 == doctest::Approx(-5.0 / 8.0).epsilon(1e-15));
    CHECK(coulomb_perturbative(1.0, 1.0, 3, 0, 0, 0).c1 == 0.0);

    // Generic parameters against the closed expressions.
    const double k = 1.4, hbar = 0.8;
    for (int nn : {0, 1, 2}) {
        const double m = nn + 1.0;
        const double h2m2 = hbar * hbar * m * m;
        const auto g = coulomb_perturbative(k, hbar, 3, nn, 0, 2);
        CHECK(g.c0 == doctest::Approx(-k * k / (2 * h2m2)).epsilon(1e-15));
        CHECK(g.c1 ==
              doctest::Approx(k * k * k / (2 * h2m2 * h2m2)).epsilon(1e-15));
        CHECK(g.c2 == doctest::Approx(-5 * std::pow(k, 4) /
                                      (8 * h2m2 * h2m2 * h2m2))
                          .epsilon(1e-15));
    }

    // |E(eta) - series| must fall off like eta^3: fitted exponent >= 2.9.
    const auto series = coulomb_perturbative(1.0, 1.0, 3, 0, 0, 2);
    std::vector<double> etas{1e-2, 1e-3, 1e-4}, rem;
    for (double eta : etas)
        rem.push_back(std::fabs(coulomb_energy(eta, 1.0, 1.0, 3, 0, 0).energy -
                                series.eval(eta)));
    for (std::size_t i = 0; i + 1 < etas.size(); ++i) {
        const double slope = std::log(rem[i] / rem[i + 1]) /
                             std::log(etas[i] / etas[i + 1]);
        CHECK(slope >= 2.9);
    }
}

TEST_CASE("degeneracy counters against the printed factorial ratios") {
    // N = 3 closed forms.
    for (int l = 0; l <= 30; ++l)
        CHECK(harmonic_count(3, l) == static_cast<std::uint64_t>(2 * l + 1));
    for (int l = 0; l <= 20; ++l)
        CHECK(harmonic_count(4, l) ==
              static_cast<std::uint64_t>((l + 1) * (l + 1)));
    CHECK(harmonic_count(2, 0) == 1);
    for (int l = 1; l <= 10; ++l) CHECK(harmonic_count(2, l) == 2);
    CHECK(harmonic_count(3, 0) == 1);
    CHECK(harmonic_count(3, 1) == 3);

    for (int dim : {3, 4, 5, 6})
        for (int l = 0; l <= 25; ++l)
            CHECK(static_cast<double>(harmonic_count(dim, l)) ==
                  doctest::Approx(harmonic_count_lgamma(dim, l)).epsilon(1e-9));

    // Sum rule: sum_l D(L_l) = D(E_nn), and the printed ratio via lgamma.
    for (int dim : {2, 3, 4, 5})
        for (int nn = 0; nn <= 20; ++nn) {
            std::uint64_t acc = 0;
            for (int l = 0; l <= nn; ++l) acc += harmonic_count(dim, l);
            CHECK(acc == coulomb_degeneracy(dim, nn));
            CHECK(static_cast<double>(acc) ==
                  doctest::Approx(coulomb_degeneracy_lgamma(dim, nn))
                      .epsilon(1e-9));
        }
    // N = 3: (nn+1)^2.
    for (int nn = 0; nn <= 12; ++nn)
        CHECK(coulomb_degeneracy(3, nn) ==
              static_cast<std::uint64_t>((nn + 1) * (nn + 1)));

    // Oscillator: N = 3 triangle numbers 1, 3, 6, 10, ...
    for (int n = 0; n <= 12; ++n)
        CHECK(oscillator_degeneracy(3, n) ==
              static_cast<std::uint64_t>((n + 1) * (n + 2) / 2));
    // Large-argument case that would overflow naive factorials.
    CHECK(oscillator_degeneracy(5, 50) == 316251);
}

TEST_CASE("spectrum tables") {
    const auto osc = spectrum_table(ModelSpec::darboux3(0.01, 1.0, 3), 25);
    REQUIRE(osc.size() == 26);
    CHECK(std::fabs(osc[0].energy - 1.48) <= 0.005);
    CHECK(osc[0].threshold == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(osc[0].degeneracy == 1);
    CHECK(osc[3].degeneracy == 10);
    for (std::size_t i = 1; i < osc.size(); ++i) {
        CHECK(osc[i].energy > osc[i - 1].energy);
        CHECK(osc[i].energy < osc[i].threshold);
    }

    const auto kep = spectrum_table(ModelSpec::taubnut(1.0, 1.0, 3), 3);
    REQUIRE(kep.size() == 4);
    CHECK(kep[0].energy ==
          doctest::Approx(-1.0 / (2.0 + std::sqrt(3.0))).epsilon(1e-12));
    CHECK(kep[1].degeneracy == 4);

    // Deformation lifts every level toward the continuum (Fig 2 pattern).
    for (int level = 0; level < 4; ++level) {
        double prev = -1e9;
        for (double eta : {0.0, 0.2, 0.4, 0.6, 1.0}) {
            const double e = coulomb_energy(eta, 1.0, 1.0, 3, level, 0).energy;
            CHECK(e > prev);
            prev = e;
        }
    }

    CHECK_THROWS_AS(spectrum_table(ModelSpec::darboux3xi(0.1, 0.01), 5),
                    std::invalid_argument);
}
