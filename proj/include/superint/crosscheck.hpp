/** \file crosscheck.hpp
    \brief Drives the radial eigensolver against the closed-form spectra:
           per-state comparisons, cross-l degeneracy evidence and grid
           convergence fits.
*/
#ifndef SUPERINT_CROSSCHECK_HPP
#define SUPERINT_CROSSCHECK_HPP

#include <vector>

#include "superint/model.hpp"

namespace superint::crosscheck {

struct RadialComparison {
    int l = 0;
    int n_r = 0;         ///< radial index of the numeric state
    int principal = 0;   ///< 2 n_r + l (oscillator) or n_r + l (Coulomb)
    double e_numeric = 0.0;
    double e_closed = 0.0;
    double rel_error = 0.0;
    double residual = 0.0;  ///< analytic eigenfunction under the coarse grid
};

struct RadialReport {
    std::vector<RadialComparison> rows;
    double max_rel_error = 0.0;
    /// Worst relative spread among numeric energies sharing one principal
    /// quantum number across different l (degeneracy evidence).
    double max_degeneracy_spread = 0.0;
    /// log2 error-ratio estimate of the discretization order, fitted on the
    /// l = 1 ground state over a three-grid refinement.
    double convergence_order = 0.0;
    bool complete = true;
    int npts = 0;
    bool richardson = true;
};

/// Solves l = 0..l_max for `states_per_l` bound states on the family's
/// default grid (tail-adapted), Richardson-extrapolating over npts and
/// 2 npts - 1 when `richardson` is set, and compares with the closed forms.
RadialReport compare_radial_spectrum(const ModelSpec& model, int l_max,
                                     int states_per_l, int npts = 4001,
                                     bool richardson = true);

}  // namespace superint::crosscheck

#endif
