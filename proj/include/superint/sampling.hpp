/** \file sampling.hpp
    \brief Seeded, reproducible phase-space sampling for verification suites.

    Distributions are hand-rolled on top of mt19937_64 because the standard
    library's uniform_real_distribution is implementation defined; byte
    identical verification reports across toolchains require a fixed mapping
    from raw engine output to doubles.
*/
#ifndef SUPERINT_SAMPLING_HPP
#define SUPERINT_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "superint/integrals.hpp"
#include "superint/model.hpp"
#include "superint/phase.hpp"

namespace superint::classical {

class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double unit() {
        return static_cast<double>(rng_() >> 11) * 0x1p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Draws q, p componentwise uniform in [-2, 2], resampling states that
    /// fall too close to the singular sets of the family: |q| < 0.1 for the
    /// Coulomb-like families, and |q| within 1e-3 of a metric singularity.
    PhaseState sample(const ModelSpec& m) {
        PhaseState s;
        s.q.resize(m.dim);
        s.p.resize(m.dim);
        const double rs = m.singular_radius();
        for (;;) {
            for (auto& v : s.q) v = uniform(-2.0, 2.0);
            for (auto& v : s.p) v = uniform(-2.0, 2.0);
            const double r = s.q_norm();
            if (m.coulomb_like() && r < 0.1) continue;
            if (r > rs - 1e-3) continue;
            return s;
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace superint::classical

#endif
