/** \file phase.hpp
    \brief Phase-space states and differentiable phase-space functions.
*/
#ifndef SUPERINT_PHASE_HPP
#define SUPERINT_PHASE_HPP

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superint/dual.hpp"

namespace superint::classical {

/// Canonical coordinates and momenta in R^N x R^N.
struct PhaseState {
    std::vector<double> q;
    std::vector<double> p;

    PhaseState() = default;
    PhaseState(std::vector<double> q_, std::vector<double> p_)
        : q(std::move(q_)), p(std::move(p_)) {}

    int dim() const { return static_cast<int>(q.size()); }
    double q_norm() const;
    /// Euclidean norm of the full 2N-dimensional phase vector.
    double phase_norm() const;
};

/// Euclidean distance between two phase states (positions and momenta).
double phase_distance(const PhaseState& a, const PhaseState& b);

/// A smooth scalar observable on phase space with exact first partials in
/// all 2N phase variables, obtained by evaluating the defining expression
/// on dual numbers.  Construct with PhaseFunction::make from any callable
/// template S f(span<const S> q, span<const S> p).
class PhaseFunction {
public:
    PhaseFunction() = default;

    template <class F>
    static PhaseFunction make(std::string name, F f) {
        PhaseFunction fn;
        fn.name_ = std::move(name);
        fn.value_ = [f](const PhaseState& s) -> double {
            return f(std::span<const double>(s.q), std::span<const double>(s.p));
        };
        fn.grad_ = [f](const PhaseState& s, std::span<double> out) {
            const int n = s.dim();
            std::vector<Duald> q(s.q.begin(), s.q.end());
            std::vector<Duald> p(s.p.begin(), s.p.end());
            for (int i = 0; i < n; ++i) {
                q[i].der = 1.0;
                out[i] = f(std::span<const Duald>(q), std::span<const Duald>(p)).der;
                q[i].der = 0.0;
            }
            for (int i = 0; i < n; ++i) {
                p[i].der = 1.0;
                out[n + i] =
                    f(std::span<const Duald>(q), std::span<const Duald>(p)).der;
                p[i].der = 0.0;
            }
        };
        return fn;
    }

    const std::string& name() const { return name_; }
    bool valid() const { return static_cast<bool>(value_); }

    double value(const PhaseState& s) const { return value_(s); }

    /// Writes (dF/dq_1..dq_N, dF/dp_1..dp_N); out.size() must be 2N.
    void gradient(const PhaseState& s, std::span<double> out) const {
        grad_(s, out);
    }

    std::vector<double> gradient(const PhaseState& s) const {
        std::vector<double> g(2 * s.dim());
        grad_(s, g);
        return g;
    }

private:
    std::string name_;
    std::function<double(const PhaseState&)> value_;
    std::function<void(const PhaseState&, std::span<double>)> grad_;
};

}  // namespace superint::classical

#endif
