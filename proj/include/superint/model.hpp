/** \file model.hpp
    \brief Model families and their parameter sets.

    Four spherically symmetric Hamiltonian families are supported, all on
    conformally flat spaces ds^2 = f(r)^2 dq^2:

      DarbouxIII    f^2 = 1 + lambda r^2          (deformed isotropic oscillator)
      TaubNut       f^2 = 1 + eta / r             (deformed Coulomb problem)
      DarbouxIIIXi  f^2 = (1 + lambda r^2 + xi r^4) / (1 - xi r^4)^2
      DarbouxIV     f^2 = (eta + r + eta zeta r^2) / ((1 - zeta r^2)^2 r)

    The two-parameter families reduce to the one-parameter ones at xi = 0
    and zeta = 0 respectively, and further to flat space at lambda = eta = 0.
*/
#ifndef SUPERINT_MODEL_HPP
#define SUPERINT_MODEL_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace superint {

enum class Family { DarbouxIII, TaubNut, DarbouxIIIXi, DarbouxIV };

const char* family_name(Family f);
Family parse_family(const std::string& name);  // throws std::invalid_argument

/// Parameter block selecting one family together with its couplings.
/// Only the parameters relevant to `family` may be nonzero.
struct ModelSpec {
    Family family = Family::DarbouxIII;
    double lambda = 0.0;  ///< oscillator deformation, units 1/length^2
    double eta    = 0.0;  ///< Coulomb deformation, units of length
    double xi     = 0.0;  ///< second oscillator deformation, 1/length^4
    double zeta   = 0.0;  ///< second Coulomb deformation, 1/length^2
    double omega  = 1.0;  ///< oscillator frequency
    double k      = 1.0;  ///< Coulomb coupling
    double hbar   = 1.0;
    int    dim    = 3;    ///< spatial dimension N >= 2

    static ModelSpec darboux3(double lambda, double omega = 1.0, int dim = 3,
                              double hbar = 1.0);
    static ModelSpec taubnut(double eta, double k = 1.0, int dim = 3,
                             double hbar = 1.0);
    static ModelSpec darboux3xi(double lambda, double xi, double omega = 1.0,
                                int dim = 3, double hbar = 1.0);
    static ModelSpec darboux4(double eta, double zeta, double k = 1.0,
                              int dim = 3, double hbar = 1.0);

    bool oscillator_like() const {
        return family == Family::DarbouxIII || family == Family::DarbouxIIIXi;
    }
    bool coulomb_like() const { return !oscillator_like(); }
    bool two_parameter() const {
        return family == Family::DarbouxIIIXi || family == Family::DarbouxIV;
    }

    /// Radius of the metric singularity (xi r^4 = 1 or zeta r^2 = 1),
    /// +inf when the family has none.
    double singular_radius() const;

    /// Smallest admissible radius for pointwise geometric evaluation.
    double min_radius() const;

    /// Throws std::invalid_argument on inconsistent parameters
    /// (negative deformations, irrelevant parameters set, N < 2, hbar <= 0).
    void validate() const;

    /// Throws std::domain_error unless min_radius() <= r and r is clear of
    /// the metric singularity.
    void require_radius(double r) const;

    std::string describe() const;
};

/// Margin kept between an admissible radius and the metric singularity.
inline constexpr double kSingularMargin = 1e-9;

/// Radii below this are rejected for the Coulomb-like families, whose
/// curvature diverges at the origin.
inline constexpr double kCoulombMinRadius = 1e-12;

}  // namespace superint

#endif
