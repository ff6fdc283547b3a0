#include "superint/model.hpp"

#include <cmath>
#include <sstream>

namespace superint {

const char* family_name(Family f) {
    switch (f) {
        case Family::DarbouxIII:   return "darboux3";
        case Family::TaubNut:      return "taubnut";
        case Family::DarbouxIIIXi: return "darboux3xi";
        case Family::DarbouxIV:    return "darboux4";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "darboux3")   return Family::DarbouxIII;
    if (name == "taubnut")    return Family::TaubNut;
    if (name == "darboux3xi") return Family::DarbouxIIIXi;
    if (name == "darboux4")   return Family::DarbouxIV;
    throw std::invalid_argument("unknown model family '" + name +
        "' (expected darboux3, taubnut, darboux3xi or darboux4)");
}

ModelSpec ModelSpec::darboux3(double lambda, double omega, int dim, double hbar) {
    ModelSpec m;
    m.family = Family::DarbouxIII;
    m.lambda = lambda;
    m.omega = omega;
    m.dim = dim;
    m.hbar = hbar;
    m.validate();
    return m;
}

ModelSpec ModelSpec::taubnut(double eta, double k, int dim, double hbar) {
    ModelSpec m;
    m.family = Family::TaubNut;
    m.eta = eta;
    m.k = k;
    m.dim = dim;
    m.hbar = hbar;
    m.validate();
    return m;
}

ModelSpec ModelSpec::darboux3xi(double lambda, double xi, double omega, int dim,
                                double hbar) {
    ModelSpec m;
    m.family = Family::DarbouxIIIXi;
    m.lambda = lambda;
    m.xi = xi;
    m.omega = omega;
    m.dim = dim;
    m.hbar = hbar;
    m.validate();
    return m;
}

ModelSpec ModelSpec::darboux4(double eta, double zeta, double k, int dim,
                              double hbar) {
    ModelSpec m;
    m.family = Family::DarbouxIV;
    m.eta = eta;
    m.zeta = zeta;
    m.k = k;
    m.dim = dim;
    m.hbar = hbar;
    m.validate();
    return m;
}

double ModelSpec::singular_radius() const {
    switch (family) {
        case Family::DarbouxIIIXi:
            return xi > 0.0 ? std::pow(xi, -0.25)
                            : std::numeric_limits<double>::infinity();
        case Family::DarbouxIV:
            return zeta > 0.0 ? 1.0 / std::sqrt(zeta)
                              : std::numeric_limits<double>::infinity();
        default:
            return std::numeric_limits<double>::infinity();
    }
}

double ModelSpec::min_radius() const {
    return coulomb_like() ? kCoulombMinRadius : 0.0;
}

void ModelSpec::validate() const {
    if (dim < 2)
        throw std::invalid_argument("model dimension must be >= 2");
    if (hbar <= 0.0)
        throw std::invalid_argument("hbar must be positive");
    if (lambda < 0.0 || eta < 0.0 || xi < 0.0 || zeta < 0.0)
        throw std::invalid_argument(
            "deformation parameters must be nonnegative");
    // A family must not carry parameters that belong to another one.
    const bool uses_lambda = oscillator_like();
    const bool uses_eta = coulomb_like();
    const bool uses_xi = family == Family::DarbouxIIIXi;
    const bool uses_zeta = family == Family::DarbouxIV;
    if (!uses_lambda && lambda != 0.0)
        throw std::invalid_argument("lambda is not a parameter of this family");
    if (!uses_eta && eta != 0.0)
        throw std::invalid_argument("eta is not a parameter of this family");
    if (!uses_xi && xi != 0.0)
        throw std::invalid_argument("xi is not a parameter of this family");
    if (!uses_zeta && zeta != 0.0)
        throw std::invalid_argument("zeta is not a parameter of this family");
    if (oscillator_like() && omega <= 0.0)
        throw std::invalid_argument("omega must be positive");
    if (coulomb_like() && k <= 0.0)
        throw std::invalid_argument("coupling k must be positive");
}

void ModelSpec::require_radius(double r) const {
    if (!(r > 0.0))
        throw std::domain_error("radius must be positive");
    if (coulomb_like() && r < kCoulombMinRadius)
        throw std::domain_error(
            "radius below the admissible minimum for a Coulomb-like family");
    const double rs = singular_radius();
    if (r >= rs - kSingularMargin) {
        std::ostringstream os;
        os << "radius " << r << " too close to the metric singularity at r = "
           << rs;
        throw std::domain_error(os.str());
    }
}

std::string ModelSpec::describe() const {
    std::ostringstream os;
    os << family_name(family) << "(N=" << dim;
    switch (family) {
        case Family::DarbouxIII:
            os << ", lambda=" << lambda << ", omega=" << omega;
            break;
        case Family::TaubNut:
            os << ", eta=" << eta << ", k=" << k;
            break;
        case Family::DarbouxIIIXi:
            os << ", lambda=" << lambda << ", xi=" << xi << ", omega=" << omega;
            break;
        case Family::DarbouxIV:
            os << ", eta=" << eta << ", zeta=" << zeta << ", k=" << k;
            break;
    }
    os << ", hbar=" << hbar << ")";
    return os.str();
}

}  // namespace superint
