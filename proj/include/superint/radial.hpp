/** \file radial.hpp
    \brief Finite-difference radial eigensolver for the quantum one-parameter
           families, independent of the closed-form spectra.

    On a wavefunction u(r) Y_l(theta) the conformal-Laplacian Hamiltonian of
    either one-parameter family reduces to the Sturm-Liouville operator

        H u = -(hbar^2/2) (1/w) d/dr ( P du/dr ) + Q u,

        w(r) = f(r)^N r^(N-1)          (radial measure density)
        P(r) = f(r)^(N-2) r^(N-1)
        Q(r) = (hbar^2/2) l(l+N-2) / (f(r)^2 r^2) + U(r) + V_c(r)
        V_c(r) = hbar^2 (N-2) / (8(N-1)) * R(r)   (curvature term)

    (see docs/radial_reduction.md for the derivation).  The solver works on
    the regular part g = sqrt(w) u / r^s of the symmetrized amplitude, where
    s is the indicial exponent of the operator at the origin; a uniform-grid
    scheme applied to the raw amplitude would lose its second order for the
    lowest angular momentum of the Coulomb family, whose states behave like
    r^(1/2) at r -> 0.  Exact harmonic-mean flux coefficients and exact cell
    masses (both closed-form monomial integrals for these families) give a
    symmetric tridiagonal matrix solved by Sturm-sequence bisection plus
    inverse iteration.  Dirichlet conditions hold at both grid ends; the
    origin-side condition decouples automatically through the vanishing
    harmonic-mean flux.  The operator A acting on plain u values satisfies
    the discrete self-adjointness relation W A = A^T W, W = diag of the
    measure weights.
*/
#ifndef SUPERINT_RADIAL_HPP
#define SUPERINT_RADIAL_HPP

#include <functional>
#include <vector>

#include "superint/model.hpp"

namespace superint::radial {

struct RadialGrid {
    double r_min = 1e-6;
    double r_max = 20.0;
    int npts = 4001;  ///< node count including both boundary nodes

    double spacing() const { return (r_max - r_min) / (npts - 1); }
    double node(int i) const { return r_min + i * spacing(); }
    void validate() const;
};

/// Grid covering the bound states of interest per the family defaults:
/// oscillator r_max = 20 sqrt(hbar/omega), Coulomb r_max = 60 hbar^2 M_max/k
/// with M_max = (count-1) + l + (N-1)/2.
RadialGrid default_grid(const ModelSpec& model, int l, int count,
                        int npts = 4001);

/// Doubles r_max until |profile| at the boundary drops below rel_tail of
/// its maximum (profile is expected to be the measure-weighted amplitude).
RadialGrid adapt_r_max(RadialGrid grid,
                       const std::function<double(double)>& profile,
                       double rel_tail = 1e-12);

/// Symmetrized tridiagonal discretization at fixed angular momentum.
struct RadialOperator {
    ModelSpec model;
    RadialGrid grid;
    int l = 0;
    /// Gauge power sigma (fractional part of the indicial exponent of the
    /// symmetrized amplitude); the scheme solves for g = sqrt(w) u / r^sigma.
    double origin_exponent = 0.0;

    // Symmetric bands over the interior nodes (size m and m-1, m = npts-2).
    std::vector<double> diag;
    std::vector<double> offdiag;
    // Un-symmetrized bands of A (the operator acting on u values), kept for
    // the self-adjointness witness W A = A^T W.
    std::vector<double> lower;
    std::vector<double> upper;
    // sqrt of the measure density at interior nodes, and at the two
    // boundary nodes (needed to apply the full stencil to sampled data).
    std::vector<double> sqrt_weight;
    double sqrt_weight_lo = 0.0, sqrt_weight_hi = 0.0;
    // Symmetric couplings of the first/last interior node to the boundary.
    double edge_coupling_lo = 0.0, edge_coupling_hi = 0.0;

    int size() const { return static_cast<int>(diag.size()); }
    double interior_node(int i) const { return grid.node(i + 1); }
};

/// Builds the discrete operator.  Only the one-parameter families have a
/// quantization here; two-parameter models are rejected.
RadialOperator build_radial_operator(const ModelSpec& model, int l,
                                     const RadialGrid& grid);

/// max |w_i A_{i,i+1} - w_{i+1} A_{i+1,i}| / max|w_i A_{i,i+1}|: the
/// discrete self-adjointness defect of A in the measure W.
double selfadjoint_witness(const RadialOperator& op);

/// Potential row Q(r) (centrifugal + family potential + curvature term);
/// exposed so tests can pin individual entries against hand arithmetic.
double potential_row(const ModelSpec& model, int l, double r);

/// Lowest energy of the continuous spectrum: omega^2/(2 lambda) for the
/// deformed oscillator (+inf at lambda = 0), 0 for the deformed Coulomb
/// system.  Two-parameter families are rejected.
double continuum_threshold(const ModelSpec& model);

/// Fraction of |threshold| kept as a margin when filtering bound states;
/// discrete states inside the margin band are reported separately as
/// probable box artifacts.
inline constexpr double kEdgeMarginFraction = 1e-3;

struct BoundState {
    int index = 0;                 ///< 0-based, sorted ascending in energy
    double energy = 0.0;
    std::vector<double> vector;    ///< symmetrized eigenvector, unit 2-norm
    int l = 0;
    double residual = 0.0;         ///< ||(B - E) v|| / ||v||
};

struct BoundStateList {
    std::vector<BoundState> states;     ///< energies below threshold - margin
    std::vector<BoundState> near_edge;  ///< inside the margin band
    double threshold = 0.0;
    bool complete = true;  ///< found the requested number below the margin
};

/// The `count` lowest eigenvalues below `threshold`, by Sturm-sequence
/// bisection and inverse iteration.
BoundStateList solve_bound_states(const RadialOperator& op, int count,
                                  double threshold);

/// Relative residual ||(A - E) v|| / ||A v|| of an analytic radial profile
/// sampled on the grid and symmetrized by sqrt(w).  The stencil of rows
/// adjacent to the boundary uses the sampled boundary values, so the
/// residual measures pure discretization error of the interior operator.
double residual_check(const RadialOperator& op,
                      const std::function<double(double)>& analytic,
                      double energy);

}  // namespace superint::radial

#endif
