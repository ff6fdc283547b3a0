#include "superint/spectrum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "superint/geometry.hpp"
#include "superint/specfun.hpp"

namespace superint::spectrum {

namespace {

void check_common(double hbar, int dim) {
    if (hbar <= 0.0) throw std::invalid_argument("hbar must be positive");
    if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
}

}  // namespace

OscillatorLevel oscillator_energy(double lambda, double omega, double hbar,
                                  int dim, int n) {
    check_common(hbar, dim);
    if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
    if (omega <= 0.0) throw std::invalid_argument("omega must be positive");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const double nu = n + 0.5 * dim;
    const double hn = hbar * nu;
    OscillatorLevel lv;
    lv.n = n;
    // E = -lambda (hbar nu)^2 + hbar nu sqrt(lambda^2 (hbar nu)^2 + omega^2),
    // rationalized: the two terms cancel almost exactly at strong
    // deformation, where E approaches omega^2 / (2 lambda) from below.
    lv.energy = hn * omega * omega /
                (std::sqrt(lambda * lambda * hn * hn + omega * omega) +
                 lambda * hn);
    lv.omega_deformed = std::sqrt(omega * omega - 2.0 * lambda * lv.energy);
    lv.degeneracy = oscillator_degeneracy(dim, n);
    lv.threshold = lambda > 0.0
                       ? omega * omega / (2.0 * lambda)
                       : std::numeric_limits<double>::infinity();
    return lv;
}

double oscillator_eigenfunction(double lambda, double omega, double hbar,
                                std::span<const int> multi_index,
                                std::span<const double> q) {
    const int dim = static_cast<int>(multi_index.size());
    if (q.size() != multi_index.size())
        throw std::invalid_argument("multi-index / position size mismatch");
    int n = 0;
    for (int ni : multi_index) {
        if (ni < 0) throw std::invalid_argument("negative quantum number");
        n += ni;
    }
    const OscillatorLevel lv = oscillator_energy(lambda, omega, hbar, dim, n);
    const double beta = std::sqrt(lv.omega_deformed / hbar);
    double q2 = 0.0;
    for (double v : q) q2 += v * v;
    double amp = std::pow(1.0 + lambda * q2, 0.25 * (2 - dim));
    for (int i = 0; i < dim; ++i) {
        const double x = beta * q[i];
        amp *= std::exp(-0.5 * x * x) * specfun::hermite(multi_index[i], x);
    }
    return amp;
}

CoulombLevel coulomb_energy(double eta, double k, double hbar, int dim, int n,
                            int l) {
    check_common(hbar, dim);
    if (eta < 0.0) throw std::invalid_argument("eta must be >= 0");
    if (k <= 0.0) throw std::invalid_argument("k must be positive");
    if (n < 0 || l < 0) throw std::invalid_argument("quantum numbers must be >= 0");
    const double m = n + l + 0.5 * (dim - 1);
    const double h2m2 = hbar * hbar * m * m;
    CoulombLevel lv;
    lv.n = n;
    lv.l = l;
    lv.principal = n + l;
    lv.energy = -k * k /
                (h2m2 + k * eta + std::sqrt(h2m2 * h2m2 + 2.0 * k * eta * h2m2));
    lv.coupling_deformed = k + eta * lv.energy;
    lv.degeneracy = coulomb_degeneracy(dim, lv.principal);
    lv.threshold = 0.0;
    return lv;
}

double coulomb_radial_eigenfunction(double eta, double k, double hbar, int dim,
                                    int n, int l, double r) {
    if (r <= 0.0) throw std::domain_error("radius must be positive");
    const CoulombLevel lv = coulomb_energy(eta, k, hbar, dim, n, l);
    const double m = n + l + 0.5 * (dim - 1);
    const double x = 2.0 * lv.coupling_deformed * r / (hbar * hbar * m);
    return std::pow(1.0 + eta / r, 0.25 * (2 - dim)) * std::pow(r, l) *
           std::exp(-0.5 * x) * specfun::laguerre(n, 2.0 * l + dim - 2.0, x);
}

PerturbativeSeries coulomb_perturbative(double k, double hbar, int dim, int n,
                                        int l, int order) {
    check_common(hbar, dim);
    if (order < 0 || order > 2)
        throw std::invalid_argument("perturbative order must be 0, 1 or 2");
    const double m = n + l + 0.5 * (dim - 1);
    const double h2m2 = hbar * hbar * m * m;
    PerturbativeSeries s;
    s.order = order;
    s.c0 = -k * k / (2.0 * h2m2);
    if (order >= 1) s.c1 = k * k * k / (2.0 * h2m2 * h2m2);
    if (order >= 2) s.c2 = -5.0 * k * k * k * k / (8.0 * h2m2 * h2m2 * h2m2);
    return s;
}

std::uint64_t harmonic_count(int dim, int l) {
    if (dim < 2 || l < 0) throw std::invalid_argument("need N >= 2, l >= 0");
    // (2l+N-2)(l+N-3)!/(l!(N-2)!) written as a difference of two full
    // homogeneous-polynomial counts to stay in exact integers:
    //   D(L_l) = C(l+N-2, N-2) + C(l+N-3, N-2).
    if (l == 0) return 1;
    return specfun::binomial(l + dim - 2, dim - 2) +
           specfun::binomial(l + dim - 3, dim - 2);
}

std::uint64_t oscillator_degeneracy(int dim, int n) {
    return specfun::stars_and_bars(dim, n);
}

std::uint64_t coulomb_degeneracy(int dim, int nn) {
    if (dim < 2 || nn < 0) throw std::invalid_argument("need N >= 2, nn >= 0");
    // (2nn+N-1)(nn+N-2)!/(nn!(N-1)!) = C(nn+N-1, N-1) + C(nn+N-2, N-1).
    return specfun::binomial(nn + dim - 1, dim - 1) +
           specfun::binomial(nn + dim - 2, dim - 1);
}

std::vector<SpectrumEntry> spectrum_table(const ModelSpec& model, int n_max) {
    model.validate();
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    std::vector<SpectrumEntry> rows;
    rows.reserve(n_max + 1);
    if (model.family == Family::DarbouxIII) {
        for (int n = 0; n <= n_max; ++n) {
            const OscillatorLevel lv =
                oscillator_energy(model.lambda, model.omega, model.hbar,
                                  model.dim, n);
            rows.push_back({n, lv.energy, lv.omega_deformed, lv.degeneracy,
                            lv.threshold});
        }
    } else if (model.family == Family::TaubNut) {
        for (int nn = 0; nn <= n_max; ++nn) {
            const CoulombLevel lv = coulomb_energy(model.eta, model.k,
                                                   model.hbar, model.dim, nn, 0);
            rows.push_back({nn, lv.energy, lv.coupling_deformed, lv.degeneracy,
                            lv.threshold});
        }
    } else {
        throw std::invalid_argument(
            "no quantum closed form for the two-parameter families");
    }
    return rows;
}

double RadialEigenfunction::operator()(double r) const {
    if (model.family == Family::DarbouxIII) {
        const OscillatorLevel lv = oscillator_energy(
            model.lambda, model.omega, model.hbar, model.dim, 2 * n_r + l);
        const double x = lv.omega_deformed * r * r / model.hbar;
        return std::pow(1.0 + model.lambda * r * r, 0.25 * (2 - model.dim)) *
               std::pow(r, l) * std::exp(-0.5 * x) *
               specfun::laguerre(n_r, l + 0.5 * model.dim - 1.0, x);
    }
    return coulomb_radial_eigenfunction(model.eta, model.k, model.hbar,
                                        model.dim, n_r, l, r);
}

RadialEigenfunction oscillator_radial_state(const ModelSpec& model, int n_r,
                                            int l) {
    if (model.family != Family::DarbouxIII)
        throw std::invalid_argument("expected the one-parameter oscillator family");
    if (n_r < 0 || l < 0) throw std::invalid_argument("quantum numbers must be >= 0");
    RadialEigenfunction u;
    u.model = model;
    u.n_r = n_r;
    u.l = l;
    u.energy = oscillator_energy(model.lambda, model.omega, model.hbar,
                                 model.dim, 2 * n_r + l)
                   .energy;
    return u;
}

RadialEigenfunction coulomb_radial_state(const ModelSpec& model, int n_r, int l) {
    if (model.family != Family::TaubNut)
        throw std::invalid_argument("expected the one-parameter Coulomb family");
    if (n_r < 0 || l < 0) throw std::invalid_argument("quantum numbers must be >= 0");
    RadialEigenfunction u;
    u.model = model;
    u.n_r = n_r;
    u.l = l;
    u.energy =
        coulomb_energy(model.eta, model.k, model.hbar, model.dim, n_r, l).energy;
    return u;
}

double radial_norm(const ModelSpec& model, const RadialEigenfunction& u,
                   double r_min, double r_max, int npts) {
    if (npts < 3) throw std::invalid_argument("need at least 3 quadrature nodes");
    if (npts % 2 == 0) ++npts;  // Simpson needs an odd node count
    const double h = (r_max - r_min) / (npts - 1);
    double acc = 0.0;
    for (int i = 0; i < npts; ++i) {
        const double r = r_min + i * h;
        const double v = u(r);
        const double g = v * v * geometry::measure_weight(model, r);
        const double w = (i == 0 || i == npts - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * g;
    }
    return std::sqrt(acc * h / 3.0);
}

}  // namespace superint::spectrum
