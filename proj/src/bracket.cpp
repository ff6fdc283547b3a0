#include "superint/bracket.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace superint::classical {

BracketResult poisson_bracket_full(const PhaseFunction& a,
                                   const PhaseFunction& b, const PhaseState& s) {
    const int n = s.dim();
    std::vector<double> ga(2 * n), gb(2 * n);
    a.gradient(s, ga);
    b.gradient(s, gb);
    double val = 0.0, na = 0.0, nb = 0.0;
    for (int i = 0; i < n; ++i)
        val += ga[i] * gb[n + i] - ga[n + i] * gb[i];
    for (int i = 0; i < 2 * n; ++i) {
        na += ga[i] * ga[i];
        nb += gb[i] * gb[i];
    }
    return {val, std::sqrt(na), std::sqrt(nb)};
}

double poisson_bracket(const PhaseFunction& a, const PhaseFunction& b,
                       const PhaseState& s) {
    return poisson_bracket_full(a, b, s).value;
}

int independence_rank(const std::vector<PhaseFunction>& fns,
                      const PhaseState& s, double rel_tol) {
    const int n = s.dim();
    const int rows = static_cast<int>(fns.size());
    Eigen::MatrixXd jac(rows, 2 * n);
    std::vector<double> g(2 * n);
    for (int r = 0; r < rows; ++r) {
        fns[r].gradient(s, g);
        for (int c = 0; c < 2 * n; ++c) jac(r, c) = g[c];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * sv(0)) ++rank;
    return rank;
}

}  // namespace superint::classical
