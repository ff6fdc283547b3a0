/** \file integrals.hpp
    \brief Hamiltonians and integrals of motion of the four model families.

    All evaluators are templated on the scalar type so the same expressions
    run on plain doubles and on dual numbers; gradients used by Poisson
    brackets, rank tests and the equations of motion therefore differentiate
    exactly the code that is being verified.

    Index conventions (zero-based internally, 1-based in names to match the
    usual notation):
      - angular blocks: upper C^(m) sums (q_i p_j - q_j p_i)^2 over
        1 <= i < j <= m, lower C_(m) over N-m < i < j <= N, m = 2..N;
        C^(N) and C_(N) coincide.
      - oscillator families carry the deformed Demkov-Fradkin tensor
        I_ij = p_i p_j - (2 lambda H - omega^2) q_i q_j (one-parameter case);
      - the Coulomb family carries the deformed Runge-Lenz vector
        R_i = sum_j p_j (q_j p_i - q_i p_j) + q_i/|q| (eta H + k).
*/
#ifndef SUPERINT_INTEGRALS_HPP
#define SUPERINT_INTEGRALS_HPP

#include <span>
#include <stdexcept>

#include "superint/model.hpp"
#include "superint/phase.hpp"

namespace superint::classical {

/// Which end of the index range an angular-momentum block anchors to.
enum class AngularAnchor { Upper, Lower };

namespace detail {
/// Test hook: flips the sign of the oscillator term inside the
/// Demkov-Fradkin tensor so that sensitivity of the bracket suites can be
/// demonstrated.  Never set outside tests / the verify --tamper option.
inline bool tamper_fradkin_sign = false;
}  // namespace detail

template <class S>
S dot(std::span<const S> a, std::span<const S> b) {
    S acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

/// Kinetic plus potential energy, exactly as defined per family.
template <class S>
S hamiltonian_eval(const ModelSpec& m, std::span<const S> q,
                   std::span<const S> p) {
    const S q2 = dot(q, q);
    const S p2 = dot(p, p);
    switch (m.family) {
        case Family::DarbouxIII:
            return (p2 + m.omega * m.omega * q2) / (2.0 * (1.0 + m.lambda * q2));
        case Family::TaubNut: {
            using std::sqrt;
            const S r = sqrt(q2);
            return (r * p2 - 2.0 * m.k) / (2.0 * (m.eta + r));
        }
        case Family::DarbouxIIIXi: {
            const S q4 = q2 * q2;
            const S b = 1.0 - m.xi * q4;
            return (b * b * p2 + m.omega * m.omega * q2) /
                   (2.0 * (1.0 + m.lambda * q2 + m.xi * q4));
        }
        case Family::DarbouxIV: {
            using std::sqrt;
            const S r = sqrt(q2);
            const S b = 1.0 - m.zeta * q2;
            const S den = m.eta + r + m.eta * m.zeta * q2;
            return (b * b * r * p2 - 2.0 * m.k * (1.0 + m.zeta * q2)) /
                   (2.0 * den);
        }
    }
    throw std::logic_error("unreachable family");
}

/// Sum of squared two-index angular momenta over lo <= i < j < hi
/// (zero-based half-open index range).
template <class S>
S angular_block(std::span<const S> q, std::span<const S> p, int lo, int hi) {
    S acc{};
    for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j) {
            const S lij = q[i] * p[j] - q[j] * p[i];
            acc += lij * lij;
        }
    return acc;
}

template <class S>
S angular_integral_eval(std::span<const S> q, std::span<const S> p, int m,
                        AngularAnchor anchor) {
    const int n = static_cast<int>(q.size());
    if (m < 2 || m > n)
        throw std::invalid_argument("angular integral requires 2 <= m <= N");
    return anchor == AngularAnchor::Upper ? angular_block(q, p, 0, m)
                                          : angular_block(q, p, n - m, n);
}

/// Deformed Demkov-Fradkin tensor component I_ij (oscillator family).
template <class S>
S fradkin_eval(const ModelSpec& m, std::span<const S> q, std::span<const S> p,
               int i, int j) {
    const S h = hamiltonian_eval(m, q, p);
    double w2 = m.omega * m.omega;
    if (detail::tamper_fradkin_sign) w2 = -w2;
    return p[i] * p[j] - (2.0 * m.lambda * h - w2) * q[i] * q[j];
}

/// Deformed Runge-Lenz component R_i (Coulomb family).
template <class S>
S runge_lenz_eval(const ModelSpec& m, std::span<const S> q,
                  std::span<const S> p, int i) {
    using std::sqrt;
    const S h = hamiltonian_eval(m, q, p);
    const S r = sqrt(dot(q, q));
    S acc{};
    for (std::size_t j = 0; j < q.size(); ++j)
        acc += p[j] * (q[j] * p[i] - q[i] * p[j]);
    return acc + q[i] / r * (m.eta * h + m.k);
}

// ---- plain-double interface with domain checks -------------------------

/// Throws std::domain_error when the state is outside the family's domain
/// (|q| = 0 for Coulomb-like families, metric singularities).
void check_state_domain(const ModelSpec& m, const PhaseState& s);

double hamiltonian(const ModelSpec& m, const PhaseState& s);
double angular_integral(const PhaseState& s, int m, AngularAnchor anchor);
double fradkin_component(const ModelSpec& m, const PhaseState& s, int i, int j);
double runge_lenz_component(const ModelSpec& m, const PhaseState& s, int i);

// ---- PhaseFunction factories -------------------------------------------

PhaseFunction hamiltonian_fn(const ModelSpec& m);
PhaseFunction angular_integral_fn(int m, AngularAnchor anchor);
PhaseFunction fradkin_fn(const ModelSpec& m, int i, int j);
PhaseFunction runge_lenz_fn(const ModelSpec& m, int i);
PhaseFunction coordinate_fn(int index, int dim);  // q_i for i < N, else p_{i-N}

/// H plus every integral of motion the family is known to carry in closed
/// form: angular blocks for all families, the Fradkin tensor for the
/// one-parameter oscillator, the Runge-Lenz vector for the one-parameter
/// Coulomb system.  The two-parameter families list H and the angular
/// blocks only.
std::vector<PhaseFunction> conserved_set(const ModelSpec& m);

/// The (2N-1)-element candidate set {H, C^(m), C_(m), extra} whose rank is
/// expected to be 2N-1 (extra = I_11 or R_1 depending on the family).
/// Two-parameter families have no published extra integral and are not
/// accepted here.
std::vector<PhaseFunction> independence_set(const ModelSpec& m);

}  // namespace superint::classical

#endif
