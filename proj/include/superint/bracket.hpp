/** \file bracket.hpp
    \brief Poisson brackets and functional-independence ranks.
*/
#ifndef SUPERINT_BRACKET_HPP
#define SUPERINT_BRACKET_HPP

#include <vector>

#include "superint/phase.hpp"

namespace superint::classical {

/// {A, B}(s) = sum_i dA/dq_i dB/dp_i - dA/dp_i dB/dq_i, with both gradients
/// computed exactly on dual numbers.
double poisson_bracket(const PhaseFunction& a, const PhaseFunction& b,
                       const PhaseState& s);

/// Bracket value plus the gradient norms used to scale vanishing tests:
/// a bracket counts as zero when |value| <= tol (1 + |grad A| |grad B|).
struct BracketResult {
    double value;
    double grad_norm_a;
    double grad_norm_b;

    double scaled(double tol = 1.0) const {
        return tol * (1.0 + grad_norm_a * grad_norm_b);
    }
};

BracketResult poisson_bracket_full(const PhaseFunction& a,
                                   const PhaseFunction& b, const PhaseState& s);

/// Numerical rank of the |fns| x 2N matrix of phase-space gradients.
/// Singular values below rel_tol * sigma_max count as zero.
int independence_rank(const std::vector<PhaseFunction>& fns,
                      const PhaseState& s, double rel_tol = 1e-8);

}  // namespace superint::classical

#endif
