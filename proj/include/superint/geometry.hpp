/** \file geometry.hpp
    \brief Conformal factors, scalar curvatures and measure weights of the
           model manifolds.

    Every family is conformally flat, ds^2 = f(r)^2 dq^2, and all of its
    geometry reduces to the radial profile f and its first two derivatives.
    Two curvature routes are provided on purpose:

      scalar_curvature_general -- the generic conformally flat expression
          R = -(N-1) [ (N-4) f'^2 + f (2 f'' + 2 (N-1) f'/r) ] / f^4
          evaluated with the hand-coded exact derivatives of f;

      scalar_curvature_closed  -- the per-family closed form written out
          explicitly in terms of the deformation parameters.

    The two must agree to near machine precision; the tests use the general
    route as an oracle for the closed forms (and vice versa).
*/
#ifndef SUPERINT_GEOMETRY_HPP
#define SUPERINT_GEOMETRY_HPP

#include "superint/model.hpp"

namespace superint::geometry {

/// Conformal factor and its exact radial derivatives at one radius.
struct ConformalData {
    double r;    ///< radius, > 0
    double f;    ///< f(r) = sqrt(g_rr), > 0 on the admissible domain
    double df;   ///< f'(r)
    double d2f;  ///< f''(r)
};

/// Exact f, f', f'' for the family at radius r.
/// Throws std::domain_error outside the admissible radial domain.
ConformalData conformal_factor(const ModelSpec& model, double r);

/// Scalar curvature from the generic conformally flat formula.
double scalar_curvature_general(const ModelSpec& model, double r);

/// Scalar curvature from the family's closed form.
double scalar_curvature_closed(const ModelSpec& model, double r);

/// Radial density of the L^2 inner product on the manifold after angular
/// integration: f(r)^N r^(N-1).
double measure_weight(const ModelSpec& model, double r);

}  // namespace superint::geometry

#endif
