/** \file spectrum.hpp
    \brief Closed-form spectra, eigenfunctions, degeneracies and limits of
           the deformed oscillator and Coulomb systems.

    Oscillator family (deformation lambda >= 0, nu = n + N/2):
        E_n     = -lambda hbar^2 nu^2 + hbar nu sqrt(hbar^2 lambda^2 nu^2 + omega^2)
        Omega   = sqrt(omega^2 - 2 lambda E_n)      (level-dependent frequency)
        E_n     = hbar Omega nu                      (equivalent closed form)
        bound states fill (0, omega^2 / (2 lambda)) and accumulate at the top.

    Coulomb family (deformation eta >= 0, M = n + l + (N-1)/2):
        E_{n,l} = -k^2 / (hbar^2 M^2 + k eta + sqrt(hbar^4 M^4 + 2 hbar^2 k eta M^2))
        K       = k + eta E_{n,l}                    (level-dependent coupling)
        E_{n,l} = -K^2 / (2 hbar^2 M^2)              (equivalent closed form)
        the spectrum depends on (n, l) only through nn = n + l and
        accumulates at 0.
*/
#ifndef SUPERINT_SPECTRUM_HPP
#define SUPERINT_SPECTRUM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "superint/model.hpp"

namespace superint::spectrum {

struct OscillatorLevel {
    int n = 0;
    double energy = 0.0;
    double omega_deformed = 0.0;      ///< Omega
    std::uint64_t degeneracy = 0;
    double threshold = 0.0;           ///< omega^2/(2 lambda); +inf at lambda = 0
};

OscillatorLevel oscillator_energy(double lambda, double omega, double hbar,
                                  int dim, int n);

/// Unnormalized position-space eigenfunction for a multi-index (n_1..n_N):
/// (1+lambda q^2)^{(2-N)/4} prod_i exp(-beta^2 q_i^2 / 2) H_{n_i}(beta q_i),
/// beta = sqrt(Omega/hbar) with Omega of the level n = sum n_i.
double oscillator_eigenfunction(double lambda, double omega, double hbar,
                                std::span<const int> multi_index,
                                std::span<const double> q);

struct CoulombLevel {
    int n = 0;                        ///< radial quantum number
    int l = 0;                        ///< angular quantum number
    int principal = 0;                ///< nn = n + l
    double energy = 0.0;
    double coupling_deformed = 0.0;   ///< K
    std::uint64_t degeneracy = 0;     ///< D(E_nn)
    double threshold = 0.0;           ///< continuum edge, 0
};

CoulombLevel coulomb_energy(double eta, double k, double hbar, int dim, int n,
                            int l);

/// Unnormalized radial eigenfunction
/// (1+eta/r)^{(2-N)/4} r^l exp(-K r/(hbar^2 M)) L_n^{2l+N-2}(2 K r/(hbar^2 M)).
double coulomb_radial_eigenfunction(double eta, double k, double hbar, int dim,
                                    int n, int l, double r);

/// Small-eta expansion E = c0 + c1 eta + c2 eta^2 + O(eta^3):
/// c0 = -k^2/(2 hbar^2 M^2), c1 = k^3/(2 hbar^4 M^4),
/// c2 = -5 k^4/(8 hbar^6 M^6).  `order` truncates the returned series.
struct PerturbativeSeries {
    int order = 2;
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double eval(double eta) const {
        double e = c0;
        if (order >= 1) e += c1 * eta;
        if (order >= 2) e += c2 * eta * eta;
        return e;
    }
};

PerturbativeSeries coulomb_perturbative(double k, double hbar, int dim, int n,
                                        int l, int order = 2);

/// Number of independent hyperspherical harmonics with angular momentum l.
std::uint64_t harmonic_count(int dim, int l);

/// Number of oscillator states at level n (compositions of n into N parts).
std::uint64_t oscillator_degeneracy(int dim, int n);

/// Number of Coulomb states at principal level nn; equals the sum of
/// harmonic_count over l = 0..nn.
std::uint64_t coulomb_degeneracy(int dim, int nn);

struct SpectrumEntry {
    int n = 0;                        ///< principal quantum number
    double energy = 0.0;
    double deformed = 0.0;            ///< Omega or K
    std::uint64_t degeneracy = 0;
    double threshold = 0.0;
};

/// Levels n = 0..n_max of the family's closed-form spectrum.
std::vector<SpectrumEntry> spectrum_table(const ModelSpec& model, int n_max);

/// Radial bound-state profile (unnormalized) with its closed-form energy;
/// the radial solver uses these as residual oracles.
struct RadialEigenfunction {
    ModelSpec model;
    int n_r = 0;   ///< number of radial nodes
    int l = 0;
    double energy = 0.0;

    double operator()(double r) const;
};

RadialEigenfunction oscillator_radial_state(const ModelSpec& model, int n_r,
                                            int l);
RadialEigenfunction coulomb_radial_state(const ModelSpec& model, int n_r, int l);

/// sqrt of the curved-measure norm of a radial profile, by composite
/// Simpson quadrature of u(r)^2 w(r) over [r_min, r_max].
double radial_norm(const ModelSpec& model, const RadialEigenfunction& u,
                   double r_min, double r_max, int npts = 4001);

}  // namespace superint::spectrum

#endif
