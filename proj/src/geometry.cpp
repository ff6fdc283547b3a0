#include "superint/geometry.hpp"

#include <cmath>

namespace superint::geometry {

namespace {

// Radial profiles are written as f = sqrt(G)/B.  With
//   L1 = f'/f  = G'/(2G) - B'/B
//   L2 = (f'/f)' = (G'' G - G'^2)/(2 G^2) - (B'' B - B'^2)/B^2
// the derivatives follow from f' = f L1 and f'' = f (L2 + L1^2).
struct Profile {
    double G, dG, d2G;  // numerator of f^2 and its derivatives
    double B, dB, d2B;  // denominator of f and its derivatives
};

Profile profile(const ModelSpec& m, double r) {
    const double r2 = r * r;
    switch (m.family) {
        case Family::DarbouxIII:
            return {1.0 + m.lambda * r2, 2.0 * m.lambda * r, 2.0 * m.lambda,
                    1.0, 0.0, 0.0};
        case Family::TaubNut:
            return {1.0 + m.eta / r, -m.eta / r2, 2.0 * m.eta / (r2 * r),
                    1.0, 0.0, 0.0};
        case Family::DarbouxIIIXi: {
            const double r4 = r2 * r2;
            return {1.0 + m.lambda * r2 + m.xi * r4,
                    2.0 * m.lambda * r + 4.0 * m.xi * r2 * r,
                    2.0 * m.lambda + 12.0 * m.xi * r2,
                    1.0 - m.xi * r4, -4.0 * m.xi * r2 * r, -12.0 * m.xi * r2};
        }
        case Family::DarbouxIV:
            // f^2 = (eta + r + eta zeta r^2) / ((1 - zeta r^2)^2 r)
            //     = (eta/r + 1 + eta zeta r) / (1 - zeta r^2)^2
            return {1.0 + m.eta / r + m.eta * m.zeta * r,
                    -m.eta / r2 + m.eta * m.zeta,
                    2.0 * m.eta / (r2 * r),
                    1.0 - m.zeta * r2, -2.0 * m.zeta * r, -2.0 * m.zeta};
    }
    throw std::logic_error("unreachable family");
}

}  // namespace

ConformalData conformal_factor(const ModelSpec& model, double r) {
    model.require_radius(r);
    const Profile pr = profile(model, r);
    const double f = std::sqrt(pr.G) / pr.B;
    const double l1 = 0.5 * pr.dG / pr.G - pr.dB / pr.B;
    const double l2 = 0.5 * (pr.d2G * pr.G - pr.dG * pr.dG) / (pr.G * pr.G) -
                      (pr.d2B * pr.B - pr.dB * pr.dB) / (pr.B * pr.B);
    return {r, f, f * l1, f * (l2 + l1 * l1)};
}

double scalar_curvature_general(const ModelSpec& model, double r) {
    const ConformalData c = conformal_factor(model, r);
    const int n = model.dim;
    const double f2 = c.f * c.f;
    return -(n - 1) *
           ((n - 4) * c.df * c.df +
            c.f * (2.0 * c.d2f + 2.0 * (n - 1) * c.df / r)) /
           (f2 * f2);
}

double scalar_curvature_closed(const ModelSpec& model, double r) {
    model.require_radius(r);
    const int n = model.dim;
    const double r2 = r * r;
    switch (model.family) {
        case Family::DarbouxIII: {
            const double d = 1.0 + model.lambda * r2;
            return -model.lambda * (n - 1) *
                   (2.0 * n + 3.0 * model.lambda * (n - 2) * r2) / (d * d * d);
        }
        case Family::TaubNut: {
            const double s = model.eta + r;
            return model.eta * (n - 1) *
                   (4.0 * (n - 3) * r + 3.0 * model.eta * (n - 2)) /
                   (4.0 * r * s * s * s);
        }
        case Family::DarbouxIIIXi: {
            const double la = model.lambda, xi = model.xi;
            const double r4 = r2 * r2, r6 = r4 * r2;
            const double d = 1.0 + la * r2 + xi * r4;
            const double u = 1.0 - xi * r4;
            const double term1 = n * (2.0 + 3.0 * la * r2 + 6.0 * xi * r4 + la * xi * r6) *
                                 (la + 3.0 * la * xi * r4 + 2.0 * xi * r2 * (3.0 + xi * r4));
            const double term2 = 6.0 * r2 * (la * la - 4.0 * xi) * u * u;
            return -(n - 1) * (term1 - term2) / (d * d * d);
        }
        case Family::DarbouxIV: {
            const double eta = model.eta, ze = model.zeta;
            const double d = eta + r + eta * ze * r2;
            const double u = 1.0 - ze * r2;
            const double term1 =
                6.0 * eta * u * u *
                (eta + r * (2.0 + ze * r * (6.0 * eta + r * (2.0 + eta * ze * r))));
            const double term2 =
                n * (3.0 * eta + r * (4.0 + eta * ze * r * (6.0 - ze * r2))) *
                (eta - ze * r2 * (6.0 * eta + r * (4.0 + 3.0 * eta * ze * r)));
            return -(n - 1) * (term1 - term2) / (4.0 * r * d * d * d);
        }
    }
    throw std::logic_error("unreachable family");
}

double measure_weight(const ModelSpec& model, double r) {
    const ConformalData c = conformal_factor(model, r);
    return std::pow(c.f, model.dim) * std::pow(r, model.dim - 1);
}

}  // namespace superint::geometry
