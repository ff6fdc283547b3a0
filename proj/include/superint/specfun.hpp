/** \file specfun.hpp
    \brief Orthogonal-polynomial and combinatorial primitives.

    The recurrences carry a separate power-of-two exponent so that high
    degrees stay representable: physicists' Hermite polynomials overflow a
    double near n ~ 150 for moderate arguments.  Rescaling by powers of two
    is exact in binary floating point, so the scaled evaluation loses no
    accuracy over the naive recurrence.
*/
#ifndef SUPERINT_SPECFUN_HPP
#define SUPERINT_SPECFUN_HPP

#include <cstdint>

namespace superint::specfun {

/// A real number represented as mantissa * 2^exp2.
struct ScaledValue {
    double mantissa = 0.0;
    int exp2 = 0;

    /// Folds the exponent back in; overflows honestly to +-inf.
    double value() const;
    /// log|x|, finite even when value() would overflow.  -inf at zero.
    double log_abs() const;
    int sign() const { return (mantissa > 0) - (mantissa < 0); }

    static ScaledValue from(double v) { return {v, 0}; }
};

/// Result of a polynomial evaluation: value plus first derivative,
/// both in scaled representation.
struct PolyEval {
    int n = 0;
    double alpha = 0.0;  // Laguerre parameter; unused for Hermite
    double x = 0.0;
    ScaledValue value;
    ScaledValue derivative;
};

/// Physicists' Hermite polynomial H_n(x) via the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.  Derivative channel uses H_n' = 2n H_{n-1}.
PolyEval hermite_eval(int n, double x);

/// Convenience accessor; +-inf when the unscaled value overflows.
double hermite(int n, double x);

/// Generalized Laguerre polynomial L_n^alpha(x) via
/// (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}.
/// Derivative channel uses d/dx L_n^alpha = -L_{n-1}^{alpha+1}.
/// Requires alpha > -1 and x >= 0.
PolyEval laguerre_eval(int n, double alpha, double x);

double laguerre(int n, double alpha, double x);

/// Number of compositions of n into N nonnegative parts,
/// (n+N-1)! / (n! (N-1)!), by an exact multiplicative scheme.
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t stars_and_bars(int N, int n);

/// Exact binomial coefficient with overflow detection.
std::uint64_t binomial(int n, int k);

}  // namespace superint::specfun

#endif
