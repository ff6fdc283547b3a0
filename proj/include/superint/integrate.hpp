/** \file integrate.hpp
    \brief Adaptive Dormand-Prince 5(4) integration of Hamilton's equations
           with dense output, plus orbit-closure detection.

    The right-hand side qdot = dH/dp, pdot = -dH/dq uses the exact dual
    number gradient of the same Hamiltonian expression the rest of the
    library evaluates.  Dense output is the standard fourth-order
    interpolant of the 5(4) pair; closure detection refines local minima of
    the phase-space distance to an anchor state on that interpolant.
*/
#ifndef SUPERINT_INTEGRATE_HPP
#define SUPERINT_INTEGRATE_HPP

#include <memory>
#include <string>
#include <vector>

#include "superint/integrals.hpp"
#include "superint/model.hpp"
#include "superint/phase.hpp"

namespace superint::classical {

struct IntegratorOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::size_t max_steps = 20'000'000;
};

/// Piecewise-polynomial solution of one integration run.
class DenseSolution {
public:
    struct Segment {
        double t0, h;
        // contd5 coefficients, each of size 2N
        std::vector<double> r1, r2, r3, r4, r5;
    };

    double t_begin() const { return t_begin_; }
    double t_end() const { return t_end_; }
    int dim() const { return dim_; }
    bool complete() const { return complete_; }
    const std::string& diagnostic() const { return diagnostic_; }

    /// Interpolated state at t (clamped to [t_begin, t_end]).
    PhaseState eval(double t) const;
    void eval(double t, std::vector<double>& y) const;

    std::vector<Segment> segments;

private:
    friend DenseSolution integrate_dense(const ModelSpec&, const PhaseState&,
                                         double, const IntegratorOptions&);
    double t_begin_ = 0.0, t_end_ = 0.0;
    int dim_ = 0;
    bool complete_ = true;
    std::string diagnostic_;
    mutable std::size_t hint_ = 0;  // last segment index, monotone queries
};

/// Integrates Hamilton's equations from s0 over [0, t_end].  On step-size
/// collapse (singular encounter) the solution is truncated and flagged.
DenseSolution integrate_dense(const ModelSpec& model, const PhaseState& s0,
                              double t_end, const IntegratorOptions& opt = {});

/// Time series with a per-sample ledger of conserved quantities.
struct Trajectory {
    std::vector<double> times;
    std::vector<PhaseState> states;
    std::vector<std::string> ledger_names;
    std::vector<std::vector<double>> ledger;  // ledger[sample][function]
    bool complete = true;
    std::string diagnostic;
    std::shared_ptr<const DenseSolution> dense;

    /// max_t |F(t) - F(0)| / (1 + |F(0)|) for ledger function `fn`.
    double ledger_drift(std::size_t fn) const;
    double max_ledger_drift() const;
};

/// Integrates and samples `samples`+1 uniformly spaced states, recording
/// H and the family's closed-form integrals (or a caller-supplied ledger).
Trajectory integrate_trajectory(const ModelSpec& model, const PhaseState& s0,
                                double t_end, double tol,
                                std::size_t samples = 1024,
                                const std::vector<PhaseFunction>* ledger = nullptr);

struct ClosureResult {
    enum class Verdict { Closed, Open, Unbounded };
    Verdict verdict = Verdict::Open;
    double period = 0.0;    ///< meaningful when closed
    double mismatch = 0.0;  ///< phase-space distance at the detected return
};

/// Finds the smallest T with |z(t0+T) - z(t0)| < tol in the phase-space
/// norm, anchoring t0 at 1% of the span to avoid the trivial match at the
/// initial instant.  Trajectories whose position norm grows beyond
/// 50 (1 + |q(0)|) are flagged unbounded.
ClosureResult detect_closure(const Trajectory& traj, double tol);

/// Rough orbital time scale used for sampling cadences and test spans:
/// 2 pi / omega for the oscillator families, the flat Kepler period at the
/// same energy for the Coulomb families (2 pi for unbound energies).
double characteristic_period(const ModelSpec& model, const PhaseState& s0);

}  // namespace superint::classical

#endif
