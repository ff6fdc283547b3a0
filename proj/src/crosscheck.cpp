#include "superint/crosscheck.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "superint/geometry.hpp"
#include "superint/radial.hpp"
#include "superint/spectrum.hpp"

namespace superint::crosscheck {

namespace {

spectrum::RadialEigenfunction analytic_state(const ModelSpec& m, int n_r, int l) {
    return m.family == Family::DarbouxIII
               ? spectrum::oscillator_radial_state(m, n_r, l)
               : spectrum::coulomb_radial_state(m, n_r, l);
}

std::vector<double> solve_energies(const ModelSpec& m, int l, int count,
                                   const radial::RadialGrid& grid,
                                   double threshold) {
    const auto op = radial::build_radial_operator(m, l, grid);
    const auto sol = radial::solve_bound_states(op, count, threshold);
    std::vector<double> e;
    for (const auto& st : sol.states) e.push_back(st.energy);
    return e;
}

}  // namespace

RadialReport compare_radial_spectrum(const ModelSpec& model, int l_max,
                                     int states_per_l, int npts,
                                     bool richardson) {
    if (l_max < 0 || states_per_l < 1)
        throw std::invalid_argument("need l_max >= 0 and states_per_l >= 1");
    RadialReport report;
    report.npts = npts;
    report.richardson = richardson;
    const double threshold = radial::continuum_threshold(model);
    const bool oscillator = model.family == Family::DarbouxIII;

    // principal number -> (energy, scale) for the degeneracy spread.
    std::map<int, std::vector<double>> by_principal;

    for (int l = 0; l <= l_max; ++l) {
        radial::RadialGrid grid = radial::default_grid(model, l, states_per_l, npts);
        const auto top = analytic_state(model, states_per_l - 1, l);
        grid = radial::adapt_r_max(grid, [&](double r) {
            return top(r) * std::sqrt(geometry::measure_weight(model, r));
        });

        const auto op = radial::build_radial_operator(model, l, grid);
        const auto sol = radial::solve_bound_states(op, states_per_l, threshold);
        report.complete = report.complete && sol.complete;

        std::vector<double> e_fine;
        if (richardson) {
            radial::RadialGrid fine = grid;
            fine.npts = 2 * grid.npts - 1;
            e_fine = solve_energies(model, l, states_per_l, fine, threshold);
        }

        for (std::size_t i = 0; i < sol.states.size(); ++i) {
            const int n_r = static_cast<int>(i);
            RadialComparison row;
            row.l = l;
            row.n_r = n_r;
            row.principal = oscillator ? 2 * n_r + l : n_r + l;
            row.e_numeric = sol.states[i].energy;
            if (richardson && i < e_fine.size())
                row.e_numeric = (4.0 * e_fine[i] - sol.states[i].energy) / 3.0;
            const auto exact = analytic_state(model, n_r, l);
            row.e_closed = exact.energy;
            row.rel_error = std::fabs(row.e_numeric - row.e_closed) /
                            std::fabs(row.e_closed);
            row.residual = radial::residual_check(op, exact, exact.energy);
            report.max_rel_error = std::max(report.max_rel_error, row.rel_error);
            by_principal[row.principal].push_back(row.e_numeric);
            report.rows.push_back(row);
        }
    }

    for (const auto& [principal, energies] : by_principal) {
        if (energies.size() < 2) continue;
        double lo = energies.front(), hi = energies.front(), scale = 0.0;
        for (double e : energies) {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
            scale = std::max(scale, std::fabs(e));
        }
        report.max_degeneracy_spread =
            std::max(report.max_degeneracy_spread, (hi - lo) / scale);
    }

    // Convergence order from a three-grid refinement of one smooth state.
    {
        const int l_fit = std::min(1, l_max);
        radial::RadialGrid base = radial::default_grid(model, l_fit, 1, 1001);
        const auto ground = analytic_state(model, 0, l_fit);
        base = radial::adapt_r_max(base, [&](double r) {
            return ground(r) * std::sqrt(geometry::measure_weight(model, r));
        });
        double e[3];
        for (int g = 0; g < 3; ++g) {
            radial::RadialGrid grid = base;
            grid.npts = (base.npts - 1) * (1 << g) + 1;  // h, h/2, h/4
            e[g] = solve_energies(model, l_fit, 1, grid, threshold).at(0);
        }
        report.convergence_order =
            std::log2(std::fabs(e[0] - e[1]) / std::fabs(e[1] - e[2]));
    }
    return report;
}

}  // namespace superint::crosscheck
