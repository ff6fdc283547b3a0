#include "superint/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "superint/geometry.hpp"

namespace superint::radial {

namespace {

void require_quantizable(const ModelSpec& m) {
    m.validate();
    if (m.two_parameter())
        throw std::invalid_argument(
            "quantization of the two-parameter families is not available");
}

double family_potential(const ModelSpec& m, double r) {
    if (m.family == Family::DarbouxIII)
        return m.omega * m.omega * r * r / (2.0 * (1.0 + m.lambda * r * r));
    return -m.k / (m.eta + r);
}

double inverse_metric(const ModelSpec& m, double r) {
    // alpha(r) = 1/f^2: leading coefficient of the symmetrized operator.
    const auto c = geometry::conformal_factor(m, r);
    return 1.0 / (c.f * c.f);
}

// Potential generated by the exact similarity transform v = sqrt(w) u:
//   chi = (1/sqrt(w)) d/dr( P (sqrt(w))' / w )
//       = alpha [ (P'/P) sigma + sigma' - sigma^2 ],
// with sigma = w'/(2w) = (N/2)(f'/f) + (N-1)/(2r).  It vanishes identically
// in the flat N = 3 case and reduces to -1/(4 r^2) in the flat plane.
double symmetrization_potential(const ModelSpec& m, double r) {
    const auto c = geometry::conformal_factor(m, r);
    const int n = m.dim;
    const double fr = c.df / c.f;
    const double alpha = 1.0 / (c.f * c.f);
    const double logp = (n - 2) * fr + (n - 1) / r;              // P'/P
    const double sigma = 0.5 * n * fr + 0.5 * (n - 1) / r;       // w'/(2w)
    const double dsigma =
        0.5 * n * (c.d2f / c.f - fr * fr) - 0.5 * (n - 1) / (r * r);
    return alpha * (logp * sigma + dsigma - sigma * sigma);
}

// The symmetrized amplitude v = sqrt(w) u behaves like r^s at the origin,
// with indicial exponent s = l + (N-1)/2 (oscillator family, f(0) = 1) and
// s = l + (N-2)/2 (Coulomb family with eta > 0, where f ~ sqrt(eta/r); at
// eta = 0 the space is exactly flat and the oscillator value applies).
// The solver works on g = v / r^sigma with sigma the fractional part of s:
// g is then smooth at the origin for every l, a uniform grid keeps its
// second order (for half-integer s the raw amplitude costs an order), and
// integer-s cases reduce to the plain smooth-coefficient scheme.
// (For 0 < eta << h the r^(1/2) layer is sub-grid and near-origin accuracy
// degrades; the supported parameter range keeps eta well above h.)
double gauge_exponent(const ModelSpec& m, int l) {
    const double s = m.family == Family::TaubNut && m.eta > 0.0
                         ? l + 0.5 * (m.dim - 2)
                         : l + 0.5 * (m.dim - 1);
    return s - std::floor(s);
}

// Integral of r^p over [a, b].
double monomial_integral(double p, double a, double b) {
    if (p == -1.0) return std::log(b / a);
    return (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / (p + 1.0);
}

// Integral of dr / P_g with P_g = alpha r^{2s} = r^{2s} / f^2; f^2 is
// affine in r^2 (oscillator) or in 1/r (Coulomb), so the harmonic-mean
// flux coefficients are exact monomial antiderivatives.
double inverse_flux_integral(const ModelSpec& m, double s, double a, double b) {
    if (m.family == Family::DarbouxIII)
        return monomial_integral(-2.0 * s, a, b) +
               m.lambda * monomial_integral(2.0 - 2.0 * s, a, b);
    return monomial_integral(-2.0 * s, a, b) +
           m.eta * monomial_integral(-2.0 * s - 1.0, a, b);
}

// Effective potential of the g-gauge: V_eff = Q + c chi - c s(s-1) alpha/r^2
// - c s alpha'/r.  The 1/r^2 and 1/r cores cancel by the choice of s,
// leaving a bounded function near the origin.
double effective_potential(const ModelSpec& m, int l, double s, double r) {
    const auto c = geometry::conformal_factor(m, r);
    const double alpha = 1.0 / (c.f * c.f);
    const double dalpha = -2.0 * c.df / (c.f * c.f * c.f);
    const double ch = 0.5 * m.hbar * m.hbar;
    return potential_row(m, l, r) +
           ch * (symmetrization_potential(m, r) -
                 s * (s - 1.0) * alpha / (r * r) - s * dalpha / r);
}

}  // namespace

void RadialGrid::validate() const {
    if (!(r_min > 0.0) || !(r_min < r_max))
        throw std::invalid_argument("radial grid requires 0 < r_min < r_max");
    if (npts < 16) throw std::invalid_argument("radial grid needs npts >= 16");
}

RadialGrid default_grid(const ModelSpec& model, int l, int count, int npts) {
    require_quantizable(model);
    RadialGrid g;
    g.npts = npts;
    g.r_min = 1e-6;
    if (model.family == Family::DarbouxIII) {
        g.r_max = 20.0 * std::sqrt(model.hbar / model.omega);
    } else {
        const double m_max = (count - 1) + l + 0.5 * (model.dim - 1);
        g.r_max = 60.0 * model.hbar * model.hbar * m_max / model.k;
    }
    g.validate();
    return g;
}

RadialGrid adapt_r_max(RadialGrid grid,
                       const std::function<double(double)>& profile,
                       double rel_tail) {
    for (int round = 0; round < 40; ++round) {
        double peak = 0.0;
        for (int i = 0; i <= 256; ++i)
            peak = std::max(
                peak, std::fabs(profile(grid.r_min +
                                        (grid.r_max - grid.r_min) * i / 256.0)));
        if (std::fabs(profile(grid.r_max)) <= rel_tail * peak) return grid;
        grid.r_max *= 2.0;
    }
    throw std::runtime_error("adapt_r_max: profile tail does not decay");
}

double potential_row(const ModelSpec& model, int l, double r) {
    require_quantizable(model);
    const auto c = geometry::conformal_factor(model, r);
    const double h2 = model.hbar * model.hbar;
    const int n = model.dim;
    const double centrifugal =
        0.5 * h2 * l * (l + n - 2) / (c.f * c.f * r * r);
    const double curvature_term = h2 * (n - 2) /
                                  (8.0 * (n - 1)) *
                                  geometry::scalar_curvature_closed(model, r);
    return centrifugal + family_potential(model, r) + curvature_term;
}

double continuum_threshold(const ModelSpec& model) {
    require_quantizable(model);
    if (model.family == Family::DarbouxIII)
        return model.lambda > 0.0
                   ? model.omega * model.omega / (2.0 * model.lambda)
                   : std::numeric_limits<double>::infinity();
    return 0.0;
}

RadialOperator build_radial_operator(const ModelSpec& model, int l,
                                     const RadialGrid& grid) {
    require_quantizable(model);
    grid.validate();
    if (l < 0) throw std::invalid_argument("angular momentum must be >= 0");
    model.require_radius(grid.r_min);
    model.require_radius(grid.r_max);

    const int m = grid.npts - 2;  // interior nodes
    const double h = grid.spacing();
    const double c = 0.5 * model.hbar * model.hbar;
    const double s = gauge_exponent(model, l);

    RadialOperator op;
    op.model = model;
    op.grid = grid;
    op.l = l;
    op.origin_exponent = s;
    op.diag.resize(m);
    op.offdiag.resize(m - 1);
    op.lower.resize(m - 1);
    op.upper.resize(m - 1);
    op.sqrt_weight.resize(m);

    // Finite-volume discretization of the g-gauge eigenproblem
    //   -c (P_g g')' + V_eff r^{2s} g = E r^{2s} g,   P_g = r^{2s} / f^2,
    // with exact harmonic-mean flux coefficients and exact cell masses.
    // The symmetric tridiagonal matrix is B = M^{-1/2} K M^{-1/2}.
    std::vector<double> flux(grid.npts - 1), mass(m), pot(m);
    for (int i = 0; i + 1 < grid.npts; ++i)
        flux[i] = c / inverse_flux_integral(model, s, grid.node(i),
                                            grid.node(i + 1));
    for (int i = 0; i < m; ++i) {
        const double r = grid.node(i + 1);
        mass[i] = monomial_integral(2.0 * s, r - 0.5 * h, r + 0.5 * h);
        pot[i] = effective_potential(model, l, s, r);
    }

    for (int i = 0; i < m; ++i)
        op.diag[i] = (flux[i] + flux[i + 1]) / mass[i] + pot[i];
    for (int i = 0; i + 1 < m; ++i)
        op.offdiag[i] = -flux[i + 1] / std::sqrt(mass[i] * mass[i + 1]);

    // Discrete measure density for amplitudes u = g r^s / sqrt(w): the
    // per-node weight is (mass/h) w / r^{2s}, which tends to w(r) as h -> 0.
    for (int i = 0; i < m; ++i) {
        const double r = grid.node(i + 1);
        op.sqrt_weight[i] =
            std::sqrt(mass[i] / h * geometry::measure_weight(model, r) /
                      std::pow(r, 2.0 * s));
    }
    // Bands of A = D^-1 B D, the operator acting on u values
    // (D = diag(sqrt weight)); kept for the self-adjointness witness.
    for (int i = 0; i + 1 < m; ++i) {
        op.upper[i] = op.offdiag[i] * op.sqrt_weight[i + 1] / op.sqrt_weight[i];
        op.lower[i] = op.offdiag[i] * op.sqrt_weight[i] / op.sqrt_weight[i + 1];
    }

    // Half-cell boundary masses; the origin-side flux is effectively zero
    // whenever 2s > 1, decoupling the fictitious wall at r_min.
    const double mass_lo =
        monomial_integral(2.0 * s, grid.node(0), grid.node(0) + 0.5 * h);
    const double mass_hi = monomial_integral(
        2.0 * s, grid.node(grid.npts - 1) - 0.5 * h, grid.node(grid.npts - 1));
    op.edge_coupling_lo = -flux[0] / std::sqrt(mass_lo * mass[0]);
    op.edge_coupling_hi = -flux[grid.npts - 2] / std::sqrt(mass_hi * mass[m - 1]);
    op.sqrt_weight_lo =
        std::sqrt(mass_lo / h * geometry::measure_weight(model, grid.node(0)) /
                  std::pow(grid.node(0), 2.0 * s));
    op.sqrt_weight_hi =
        std::sqrt(mass_hi / h *
                  geometry::measure_weight(model, grid.node(grid.npts - 1)) /
                  std::pow(grid.node(grid.npts - 1), 2.0 * s));
    return op;
}

double selfadjoint_witness(const RadialOperator& op) {
    double worst = 0.0, scale = 0.0;
    for (int i = 0; i + 1 < op.size(); ++i) {
        const double wi = op.sqrt_weight[i] * op.sqrt_weight[i];
        const double wj = op.sqrt_weight[i + 1] * op.sqrt_weight[i + 1];
        const double lhs = wi * op.upper[i];
        const double rhs = wj * op.lower[i];
        worst = std::max(worst, std::fabs(lhs - rhs));
        scale = std::max(scale, std::fabs(lhs));
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

namespace {

/// Number of eigenvalues of the symmetric tridiagonal (d, e) below x,
/// by the classic LDL^T Sturm count with a pivot safeguard.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                double x, double pivmin) {
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (std::fabs(q) < pivmin) q = q < 0.0 ? -pivmin : pivmin;
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

/// k-th smallest eigenvalue (0-based) via bisection on the Sturm count.
double sturm_bisect(const std::vector<double>& d, const std::vector<double>& e,
                    int k, double lo, double hi, double pivmin) {
    for (int it = 0; it < 210 && hi - lo > 2.0 * std::numeric_limits<double>::epsilon() *
                                      std::max({std::fabs(lo), std::fabs(hi), 1e-3});
         ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // bracket at machine resolution
        if (sturm_count(d, e, mid, pivmin) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

/// Tridiagonal LU with partial pivoting (dgttrf-style), for the shifted
/// inverse-iteration solves.
struct TriLU {
    std::vector<double> dl, dd, du, du2;
    std::vector<int> piv;

    TriLU(const std::vector<double>& diag, const std::vector<double>& off,
          double shift) {
        const std::size_t n = diag.size();
        dd.resize(n);
        dl.assign(off.begin(), off.end());
        du.assign(off.begin(), off.end());
        du2.assign(n >= 2 ? n - 2 : 0, 0.0);
        piv.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) dd[i] = diag[i] - shift;
        const double tiny = 1e-290;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::fabs(dd[i]) >= std::fabs(dl[i])) {
                if (std::fabs(dd[i]) < tiny) dd[i] = dd[i] < 0 ? -tiny : tiny;
                const double mult = dl[i] / dd[i];
                dl[i] = mult;
                dd[i + 1] -= mult * du[i];
                if (i + 2 < n) du2[i] = 0.0;
            } else {
                piv[i] = 1;
                const double mult = dd[i] / dl[i];
                dd[i] = dl[i];
                dl[i] = mult;
                const double tmp = du[i];
                du[i] = dd[i + 1];
                dd[i + 1] = tmp - mult * dd[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -mult * du[i + 1];
                }
            }
        }
        if (std::fabs(dd[n - 1]) < tiny) dd[n - 1] = dd[n - 1] < 0 ? -tiny : tiny;
    }

    void solve(std::vector<double>& x) const {
        const std::size_t n = dd.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (piv[i] == 0) {
                x[i + 1] -= dl[i] * x[i];
            } else {
                const double tmp = x[i];
                x[i] = x[i + 1];
                x[i + 1] = tmp - dl[i] * x[i];
            }
        }
        x[n - 1] /= dd[n - 1];
        if (n >= 2) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / dd[n - 2];
        for (std::size_t ii = n; ii >= 3; --ii) {
            const std::size_t i = ii - 3;
            x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i];
        }
    }
};

double normalize(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    if (s > 0.0)
        for (double& x : v) x /= s;
    return s;
}

double tridiag_residual(const std::vector<double>& d,
                        const std::vector<double>& e,
                        const std::vector<double>& v, double energy) {
    const std::size_t n = d.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = (d[i] - energy) * v[i];
        if (i > 0) r += e[i - 1] * v[i - 1];
        if (i + 1 < n) r += e[i] * v[i + 1];
        acc += r * r;
    }
    return std::sqrt(acc);
}

}  // namespace

BoundStateList solve_bound_states(const RadialOperator& op, int count,
                                  double threshold) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    const auto& d = op.diag;
    const auto& e = op.offdiag;
    const int n = op.size();

    // Gershgorin bounds.
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    double emax2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double rad = 0.0;
        if (i > 0) rad += std::fabs(e[i - 1]);
        if (i + 1 < n) rad += std::fabs(e[i]);
        lo = std::min(lo, d[i] - rad);
        hi = std::max(hi, d[i] + rad);
        if (i + 1 < n) emax2 = std::max(emax2, e[i] * e[i]);
    }
    const double pivmin =
        std::max(emax2 * std::numeric_limits<double>::min(), 1e-300);

    BoundStateList out;
    out.threshold = threshold;
    const double margin = std::isfinite(threshold)
                              ? kEdgeMarginFraction * std::fabs(threshold)
                              : 0.0;
    const double accept_below =
        std::isfinite(threshold) ? threshold - margin
                                 : std::numeric_limits<double>::infinity();

    const int want = std::min(count, n);
    std::mt19937_64 seed_rng(0x5eed5eedULL);

    int kept = 0;
    for (int k = 0; k < n && kept < want; ++k) {
        const double energy = sturm_bisect(d, e, k, lo, hi, pivmin);
        if (std::isfinite(threshold) && energy >= threshold)
            break;  // inside the discretized continuum: stop entirely

        BoundState bs;
        bs.index = k;
        bs.energy = energy;
        bs.l = op.l;
        bs.vector.resize(n);
        for (double& x : bs.vector)
            x = static_cast<double>(seed_rng() >> 11) * 0x1p-52 - 1.0;
        normalize(bs.vector);

        // Inverse iteration on a slightly shifted matrix.
        const double shift =
            energy + 1e4 * std::numeric_limits<double>::epsilon() *
                         std::max(std::fabs(energy), std::fabs(hi) * 1e-8);
        TriLU lu(d, e, shift);
        for (int it = 0; it < 5; ++it) {
            lu.solve(bs.vector);
            // Re-orthogonalize against previously found vectors.
            for (const auto& prev : out.states) {
                double dotv = 0.0;
                for (int i = 0; i < n; ++i) dotv += prev.vector[i] * bs.vector[i];
                for (int i = 0; i < n; ++i) bs.vector[i] -= dotv * prev.vector[i];
            }
            normalize(bs.vector);
            bs.residual = tridiag_residual(d, e, bs.vector, energy);
            if (bs.residual < 1e-10 * std::max(std::fabs(energy), 1.0)) break;
        }

        if (energy < accept_below) {
            out.states.push_back(std::move(bs));
            ++kept;
        } else {
            out.near_edge.push_back(std::move(bs));
        }
    }
    out.complete = kept == count;
    return out;
}

double residual_check(const RadialOperator& op,
                      const std::function<double(double)>& analytic,
                      double energy) {
    const int n = op.size();
    // Sample and symmetrize, boundary nodes included.
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = analytic(op.interior_node(i)) * op.sqrt_weight[i];
    const double v_lo = analytic(op.grid.node(0)) * op.sqrt_weight_lo;
    const double v_hi =
        analytic(op.grid.node(op.grid.npts - 1)) * op.sqrt_weight_hi;

    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        double av = op.diag[i] * v[i];
        av += i > 0 ? op.offdiag[i - 1] * v[i - 1] : op.edge_coupling_lo * v_lo;
        av += i + 1 < n ? op.offdiag[i] * v[i + 1] : op.edge_coupling_hi * v_hi;
        const double r = av - energy * v[i];
        num += r * r;
        den += av * av;
    }
    if (den == 0.0) throw std::invalid_argument("analytic profile vanishes on the grid");
    return std::sqrt(num / den);
}

}  // namespace superint::radial
