#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <span>
#include <vector>

#include "superint/bracket.hpp"
#include "superint/dual.hpp"
#include "superint/integrals.hpp"
#include "superint/sampling.hpp"

using namespace superint;
using namespace superint::classical;

namespace {

// Finite-difference gradient: the independent cross-check on the dual
// number differentiation used everywhere else.
std::vector<double> fd_gradient(const PhaseFunction& f, const PhaseState& s,
                                double h = 1e-6) {
    std::vector<double> g(2 * s.dim());
    PhaseState sp = s, sm = s;
    for (int i = 0; i < s.dim(); ++i) {
        sp.q[i] += h;
        sm.q[i] -= h;
        g[i] = (f.value(sp) - f.value(sm)) / (2 * h);
        sp.q[i] = s.q[i];
        sm.q[i] = s.q[i];
    }
    for (int i = 0; i < s.dim(); ++i) {
        sp.p[i] += h;
        sm.p[i] -= h;
        g[s.dim() + i] = (f.value(sp) - f.value(sm)) / (2 * h);
        sp.p[i] = s.p[i];
        sm.p[i] = s.p[i];
    }
    return g;
}

}  // namespace

TEST_CASE("dual arithmetic differentiates composite expressions exactly") {
    // d/dx [x^2 sqrt(x) + 3/x] at x = 2.
    Duald x{2.0, 1.0};
    const Duald y = x * x * sqrt(x) + 3.0 / x;
    const double expected = 2.5 * std::pow(2.0, 1.5) - 3.0 / 4.0;
    CHECK(y.der == doctest::Approx(expected).epsilon(1e-15));

    const Duald z = exp(log(x) * 1.5);  // x^1.5
    CHECK(z.der == doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("Hamiltonian pinned values") {
    // q = 0 kills both the deformation and the potential.
    const PhaseState origin({0.0, 0.0}, {0.3, -1.2});
    CHECK(hamiltonian(ModelSpec::darboux3(0.7, 1.0, 2), origin) ==
          doctest::Approx(0.5 * (0.09 + 1.44)).epsilon(1e-15));

    // Deformed oscillator, hand arithmetic: (1/2 + 1/2) / 1.1.
    const PhaseState s2({1.0, 0.0}, {0.0, 1.0});
    CHECK(hamiltonian(ModelSpec::darboux3(0.1, 1.0, 2), s2) ==
          doctest::Approx(10.0 / 11.0).epsilon(1e-15));

    // Euclidean Kepler limit: 1/2 - 1 = -1/2.
    const PhaseState s3({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    CHECK(hamiltonian(ModelSpec::taubnut(0.0, 1.0, 3), s3) ==
          doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("flat and reduction limits of the Hamiltonians") {
    StateSampler smp(7);
    const auto flat_osc = ModelSpec::darboux3(0.0, 1.3, 3);
    const auto flat_kep = ModelSpec::taubnut(0.0, 0.8, 3);
    const auto osc = ModelSpec::darboux3(0.2, 1.3, 3);
    const auto osc2 = ModelSpec::darboux3xi(0.2, 0.0, 1.3, 3);
    const auto kep = ModelSpec::taubnut(0.6, 0.8, 3);
    const auto kep2 = ModelSpec::darboux4(0.6, 0.0, 0.8, 3);
    for (int i = 0; i < 50; ++i) {
        const PhaseState s = smp.sample(flat_kep);
        double q2 = 0, p2 = 0;
        for (double v : s.q) q2 += v * v;
        for (double v : s.p) p2 += v * v;
        CHECK(hamiltonian(flat_osc, s) ==
              doctest::Approx(0.5 * p2 + 0.5 * 1.69 * q2).epsilon(1e-12));
        CHECK(hamiltonian(flat_kep, s) ==
              doctest::Approx(0.5 * p2 - 0.8 / std::sqrt(q2)).epsilon(1e-12));
        CHECK(hamiltonian(osc, s) ==
              doctest::Approx(hamiltonian(osc2, s)).epsilon(1e-15));
        CHECK(hamiltonian(kep, s) ==
              doctest::Approx(hamiltonian(kep2, s)).epsilon(1e-15));
    }
}

TEST_CASE("angular integrals") {
    const PhaseState s({1.0, 0.0}, {0.0, 1.0});
    CHECK(angular_integral(s, 2, AngularAnchor::Upper) == 1.0);

    // C^(N) = C_(N) and radial states carry no angular momentum.
    StateSampler smp(11);
    const auto m = ModelSpec::darboux3(0.1, 1.0, 3);
    for (int i = 0; i < 50; ++i) {
        const PhaseState st = smp.sample(m);
        CHECK(angular_integral(st, 3, AngularAnchor::Upper) ==
              doctest::Approx(angular_integral(st, 3, AngularAnchor::Lower))
                  .epsilon(1e-15));
    }
    const PhaseState radial({1.0, 2.0, -0.5}, {0.3, 0.6, -0.15});  // p || q
    CHECK(angular_integral(radial, 3, AngularAnchor::Upper) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(angular_integral(s, 5, AngularAnchor::Upper),
                    std::invalid_argument);
}

TEST_CASE("Fradkin tensor: trace identity, flat limit, pinned component") {
    const auto m = ModelSpec::darboux3(0.1, 1.0, 2);
    const PhaseState s({1.0, 0.0}, {0.0, 1.0});
    // I_12 = p1 p2 - (2 lambda H - omega^2) q1 q2 with q2 = 0.
    CHECK(fradkin_component(m, s, 0, 1) == doctest::Approx(0.0).epsilon(1e-15));

    StateSampler smp(23);
    for (int dim : {2, 3, 4}) {
        const auto md = ModelSpec::darboux3(0.17, 1.1, dim);
        for (int i = 0; i < 100; ++i) {
            const PhaseState st = smp.sample(md);
            double tr = 0.0;
            for (int d = 0; d < dim; ++d) tr += fradkin_component(md, st, d, d);
            CHECK(0.5 * tr ==
                  doctest::Approx(hamiltonian(md, st)).epsilon(1e-12));
        }
    }

    // lambda = 0: flat Fradkin tensor p_i p_j + omega^2 q_i q_j.
    const auto flat = ModelSpec::darboux3(0.0, 1.3, 3);
    const PhaseState st({0.4, -1.0, 0.7}, {0.2, 0.5, -0.9});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(fradkin_component(flat, st, i, j) ==
                  doctest::Approx(st.p[i] * st.p[j] +
                                  1.69 * st.q[i] * st.q[j])
                      .epsilon(1e-14));
}

TEST_CASE("Runge-Lenz vector: circular orbit and radial state") {
    // Flat circular Kepler orbit has zero eccentricity vector.
    const auto kep = ModelSpec::taubnut(0.0, 1.0, 3);
    const PhaseState circ({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
    for (int i = 0; i < 3; ++i)
        CHECK(runge_lenz_component(kep, circ, i) ==
              doctest::Approx(0.0).epsilon(1e-14));

    // Radial state: the angular part vanishes, R_i = q_i/|q| (eta H + k).
    const auto m = ModelSpec::taubnut(0.5, 1.0, 3);
    const PhaseState rad({1.0, 2.0, 2.0}, {0.2, 0.4, 0.4});
    const double h = hamiltonian(m, rad);
    for (int i = 0; i < 3; ++i)
        CHECK(runge_lenz_component(m, rad, i) ==
              doctest::Approx(rad.q[i] / 3.0 * (0.5 * h + 1.0)).epsilon(1e-13));
}

TEST_CASE("canonical Poisson brackets and FD cross-check") {
    const PhaseState s({0.7, -0.2, 1.1}, {0.4, 0.9, -0.3});
    const auto q1 = coordinate_fn(0, 3);
    const auto p1 = coordinate_fn(3, 3);
    const auto q2 = coordinate_fn(1, 3);
    CHECK(poisson_bracket(q1, p1, s) == 1.0);
    CHECK(poisson_bracket(q1, q2, s) == 0.0);
    CHECK(poisson_bracket(p1, q1, s) == -1.0);

    // Dual-number gradients agree with finite differences on a nontrivial
    // pair, and the bracket value follows.
    const auto m = ModelSpec::taubnut(0.5, 1.0, 3);
    const auto h = hamiltonian_fn(m);
    const auto r1 = runge_lenz_fn(m, 0);
    const auto gh = h.gradient(s);
    const auto gh_fd = fd_gradient(h, s);
    for (std::size_t i = 0; i < gh.size(); ++i)
        CHECK(gh[i] == doctest::Approx(gh_fd[i]).epsilon(1e-6));
    double fd_bracket = 0.0;
    const auto gr_fd = fd_gradient(r1, s);
    for (int i = 0; i < 3; ++i)
        fd_bracket += gh_fd[i] * gr_fd[3 + i] - gh_fd[3 + i] * gr_fd[i];
    CHECK(poisson_bracket(h, r1, s) ==
          doctest::Approx(fd_bracket).epsilon(1e-5));
}

TEST_CASE("conservation brackets vanish for all printed integrals") {
    StateSampler smp(1234);
    for (int dim : {2, 3}) {
        for (const auto& m :
             {ModelSpec::darboux3(0.15, 1.0, dim),
              ModelSpec::taubnut(0.4, 1.0, dim),
              ModelSpec::darboux3xi(0.15, 0.01, 1.0, dim),
              ModelSpec::darboux4(0.3, 0.02, 1.0, dim)}) {
            const auto h = hamiltonian_fn(m);
            const auto fns = conserved_set(m);
            for (int i = 0; i < 100; ++i) {
                const PhaseState st = smp.sample(m);
                for (std::size_t j = 1; j < fns.size(); ++j) {
                    const auto br = poisson_bracket_full(h, fns[j], st);
                    CHECK(std::fabs(br.value) <= br.scaled(1e-10));
                }
            }
        }
    }
}

TEST_CASE("Taub-NUT Runge-Lenz brackets at the raw 1e-8 gate") {
    StateSampler smp(99);
    const auto m = ModelSpec::taubnut(0.5, 1.0, 3);
    const auto h = hamiltonian_fn(m);
    for (int i = 0; i < 100; ++i) {
        const PhaseState st = smp.sample(m);
        for (int c = 0; c < 3; ++c)
            CHECK(std::fabs(poisson_bracket(h, runge_lenz_fn(m, c), st)) <= 1e-8);
    }
}

TEST_CASE("involution sets pairwise commute") {
    StateSampler smp(4321);
    const auto m = ModelSpec::darboux3(0.12, 1.0, 3);
    std::vector<std::vector<PhaseFunction>> sets;
    {
        std::vector<PhaseFunction> a{hamiltonian_fn(m)}, b{hamiltonian_fn(m)}, c;
        for (int mm = 2; mm <= 3; ++mm) {
            a.push_back(angular_integral_fn(mm, AngularAnchor::Upper));
            b.push_back(angular_integral_fn(mm, AngularAnchor::Lower));
        }
        for (int i = 0; i < 3; ++i) c.push_back(fradkin_fn(m, i, i));
        sets = {a, b, c};
    }
    for (int i = 0; i < 25; ++i) {
        const PhaseState st = smp.sample(m);
        for (const auto& set : sets)
            for (std::size_t a = 0; a < set.size(); ++a)
                for (std::size_t b = a + 1; b < set.size(); ++b) {
                    const auto br = poisson_bracket_full(set[a], set[b], st);
                    CHECK(std::fabs(br.value) <= br.scaled(1e-10));
                }
    }
}

TEST_CASE("functional independence ranks") {
    StateSampler smp(2718);
    for (int dim : {2, 3, 4}) {
        for (const auto& m : {ModelSpec::darboux3(0.1, 1.0, dim),
                              ModelSpec::taubnut(0.5, 1.0, dim)}) {
            const auto fns = independence_set(m);
            CHECK(static_cast<int>(fns.size()) == 2 * dim - 1);
            int hits = 0;
            for (int i = 0; i < 100; ++i)
                if (independence_rank(fns, smp.sample(m)) == 2 * dim - 1) ++hits;
            CHECK(hits >= 95);

            // Duplicates add no rank.
            auto dup = fns;
            dup.push_back(fns.front());
            CHECK(independence_rank(dup, smp.sample(m)) == 2 * dim - 1);
        }
    }
}

TEST_CASE("domain violations are rejected with diagnostics") {
    const auto m = ModelSpec::taubnut(0.5, 1.0, 3);
    CHECK_THROWS_AS(hamiltonian(m, PhaseState({0, 0, 0}, {1, 0, 0})),
                    std::domain_error);
    CHECK_THROWS_AS(runge_lenz_component(m, PhaseState({0, 0, 0}, {1, 0, 0}), 0),
                    std::domain_error);
    const auto m2 = ModelSpec::darboux3xi(0.1, 1.0, 1.0, 2);
    CHECK_THROWS_AS(hamiltonian(m2, PhaseState({1.0, 0.0}, {0, 0})),
                    std::domain_error);
    CHECK_THROWS_AS(fradkin_component(m2, PhaseState({0.5, 0.0}, {0, 0}), 0, 0),
                    std::invalid_argument);  // tensor needs the one-parameter family
}
