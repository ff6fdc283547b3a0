#include "superint/integrals.hpp"

#include <cmath>

namespace superint::classical {

namespace {

std::string index_suffix(int i) { return std::to_string(i + 1); }

}  // namespace

double PhaseState::q_norm() const {
    double acc = 0.0;
    for (double v : q) acc += v * v;
    return std::sqrt(acc);
}

double PhaseState::phase_norm() const {
    double acc = 0.0;
    for (double v : q) acc += v * v;
    for (double v : p) acc += v * v;
    return std::sqrt(acc);
}

double phase_distance(const PhaseState& a, const PhaseState& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.q.size(); ++i) {
        const double dq = a.q[i] - b.q[i];
        const double dp = a.p[i] - b.p[i];
        acc += dq * dq + dp * dp;
    }
    return std::sqrt(acc);
}

void check_state_domain(const ModelSpec& m, const PhaseState& s) {
    if (s.q.size() != s.p.size() ||
        static_cast<int>(s.q.size()) != m.dim)
        throw std::invalid_argument("phase state dimension mismatch");
    const double r = s.q_norm();
    if (m.coulomb_like() && r < kCoulombMinRadius)
        throw std::domain_error("|q| = 0 not admissible for a Coulomb-like family");
    const double rs = m.singular_radius();
    if (r >= rs - kSingularMargin)
        throw std::domain_error("state beyond the metric singularity");
}

double hamiltonian(const ModelSpec& m, const PhaseState& s) {
    check_state_domain(m, s);
    return hamiltonian_eval(m, std::span<const double>(s.q),
                            std::span<const double>(s.p));
}

double angular_integral(const PhaseState& s, int m, AngularAnchor anchor) {
    return angular_integral_eval(std::span<const double>(s.q),
                                 std::span<const double>(s.p), m, anchor);
}

double fradkin_component(const ModelSpec& m, const PhaseState& s, int i, int j) {
    if (!m.oscillator_like() || m.two_parameter())
        throw std::invalid_argument(
            "Fradkin tensor is defined for the one-parameter oscillator family");
    if (i < 0 || j < 0 || i >= m.dim || j >= m.dim)
        throw std::out_of_range("Fradkin index out of range");
    check_state_domain(m, s);
    return fradkin_eval(m, std::span<const double>(s.q),
                        std::span<const double>(s.p), i, j);
}

double runge_lenz_component(const ModelSpec& m, const PhaseState& s, int i) {
    if (m.family != Family::TaubNut)
        throw std::invalid_argument(
            "Runge-Lenz vector is defined for the one-parameter Coulomb family");
    if (i < 0 || i >= m.dim)
        throw std::out_of_range("Runge-Lenz index out of range");
    check_state_domain(m, s);
    return runge_lenz_eval(m, std::span<const double>(s.q),
                           std::span<const double>(s.p), i);
}

PhaseFunction hamiltonian_fn(const ModelSpec& m) {
    return PhaseFunction::make("H", [m]<class S>(std::span<const S> q,
                                                 std::span<const S> p) {
        return hamiltonian_eval(m, q, p);
    });
}

PhaseFunction angular_integral_fn(int m, AngularAnchor anchor) {
    const std::string name =
        (anchor == AngularAnchor::Upper ? "C^(" : "C_(") + std::to_string(m) + ")";
    return PhaseFunction::make(
        name, [m, anchor]<class S>(std::span<const S> q, std::span<const S> p) {
            return angular_integral_eval(q, p, m, anchor);
        });
}

PhaseFunction fradkin_fn(const ModelSpec& m, int i, int j) {
    const std::string name = "I" + index_suffix(i) + index_suffix(j);
    return PhaseFunction::make(
        name, [m, i, j]<class S>(std::span<const S> q, std::span<const S> p) {
            return fradkin_eval(m, q, p, i, j);
        });
}

PhaseFunction runge_lenz_fn(const ModelSpec& m, int i) {
    const std::string name = "R" + index_suffix(i);
    return PhaseFunction::make(
        name, [m, i]<class S>(std::span<const S> q, std::span<const S> p) {
            return runge_lenz_eval(m, q, p, i);
        });
}

PhaseFunction coordinate_fn(int index, int dim) {
    const bool momentum = index >= dim;
    const int i = momentum ? index - dim : index;
    const std::string name =
        (momentum ? "p" : "q") + index_suffix(i);
    return PhaseFunction::make(
        name, [momentum, i]<class S>(std::span<const S> q, std::span<const S> p) {
            return momentum ? p[i] : q[i];
        });
}

std::vector<PhaseFunction> conserved_set(const ModelSpec& m) {
    std::vector<PhaseFunction> fns;
    fns.push_back(hamiltonian_fn(m));
    for (int mm = 2; mm <= m.dim; ++mm) {
        fns.push_back(angular_integral_fn(mm, AngularAnchor::Upper));
        if (mm < m.dim)  // C_(N) duplicates C^(N)
            fns.push_back(angular_integral_fn(mm, AngularAnchor::Lower));
    }
    if (m.family == Family::DarbouxIII) {
        for (int i = 0; i < m.dim; ++i)
            for (int j = i; j < m.dim; ++j)  // tensor is symmetric in (i,j)
                fns.push_back(fradkin_fn(m, i, j));
    } else if (m.family == Family::TaubNut) {
        for (int i = 0; i < m.dim; ++i) fns.push_back(runge_lenz_fn(m, i));
    }
    return fns;
}

std::vector<PhaseFunction> independence_set(const ModelSpec& m) {
    if (m.two_parameter())
        throw std::invalid_argument(
            "no published (2N-1)-element set for the two-parameter families");
    std::vector<PhaseFunction> fns;
    fns.push_back(hamiltonian_fn(m));
    for (int mm = 2; mm <= m.dim; ++mm)
        fns.push_back(angular_integral_fn(mm, AngularAnchor::Upper));
    for (int mm = 2; mm < m.dim; ++mm)
        fns.push_back(angular_integral_fn(mm, AngularAnchor::Lower));
    if (m.family == Family::DarbouxIII)
        fns.push_back(fradkin_fn(m, 0, 0));
    else
        fns.push_back(runge_lenz_fn(m, 0));
    return fns;
}

}  // namespace superint::classical
