#include "superint/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace superint::classical {

namespace {

// Dormand-Prince 5(4) tableau (Hairer-Norsett-Wanner notation).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// Error weights of the embedded 4th-order solution.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output weights.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

/// Hamiltonian vector field on y = (q_1..q_N, p_1..p_N).
class HamiltonFlow {
public:
    explicit HamiltonFlow(const ModelSpec& m) : m_(m), qd_(m.dim), pd_(m.dim) {}

    /// Returns false when the field is not finite (domain violation).
    bool operator()(const std::vector<double>& y, std::vector<double>& dydt) {
        const int n = m_.dim;
        for (int i = 0; i < n; ++i) {
            qd_[i] = {y[i], 0.0};
            pd_[i] = {y[n + i], 0.0};
        }
        const std::span<const Duald> q(qd_), p(pd_);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            pd_[i].der = 1.0;
            const double v = hamiltonian_eval(m_, q, p).der;  // dH/dp_i
            pd_[i].der = 0.0;
            dydt[i] = v;
            ok &= std::isfinite(v);
        }
        for (int i = 0; i < n; ++i) {
            qd_[i].der = 1.0;
            const double v = hamiltonian_eval(m_, q, p).der;  // dH/dq_i
            qd_[i].der = 0.0;
            dydt[n + i] = -v;
            ok &= std::isfinite(v);
        }
        return ok;
    }

private:
    ModelSpec m_;
    std::vector<Duald> qd_, pd_;
};

double rms_scaled_error(const std::vector<double>& err,
                        const std::vector<double>& y0,
                        const std::vector<double>& y1, double atol,
                        double rtol) {
    double acc = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double sc =
            atol + rtol * std::max(std::fabs(y0[i]), std::fabs(y1[i]));
        const double e = err[i] / sc;
        acc += e * e;
    }
    return std::sqrt(acc / static_cast<double>(err.size()));
}

}  // namespace

PhaseState DenseSolution::eval(double t) const {
    std::vector<double> y(2 * dim_);
    eval(t, y);
    PhaseState s;
    s.q.assign(y.begin(), y.begin() + dim_);
    s.p.assign(y.begin() + dim_, y.end());
    return s;
}

void DenseSolution::eval(double t, std::vector<double>& y) const {
    t = std::clamp(t, t_begin_, t_end_);
    // Monotone queries dominate; start from the previous segment.
    std::size_t lo = hint_ < segments.size() ? hint_ : 0;
    if (segments[lo].t0 > t) lo = 0;
    std::size_t hi = segments.size();
    while (lo + 1 < hi) {  // last segment with t0 <= t
        const std::size_t mid = (lo + hi) / 2;
        if (segments[mid].t0 <= t)
            lo = mid;
        else
            hi = mid;
    }
    hint_ = lo;
    const Segment& sg = segments[lo];
    const double th = (t - sg.t0) / sg.h;
    const double th1 = 1.0 - th;
    y.resize(sg.r1.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = sg.r1[i] +
               th * (sg.r2[i] +
                     th1 * (sg.r3[i] + th * (sg.r4[i] + th1 * sg.r5[i])));
}

DenseSolution integrate_dense(const ModelSpec& model, const PhaseState& s0,
                              double t_end, const IntegratorOptions& opt) {
    model.validate();
    check_state_domain(model, s0);
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");

    const int n = model.dim;
    const std::size_t ny = 2 * static_cast<std::size_t>(n);
    DenseSolution sol;
    sol.dim_ = n;
    sol.t_begin_ = 0.0;

    HamiltonFlow flow(model);
    std::vector<double> y(ny), ynew(ny), ytmp(ny), err(ny);
    std::vector<std::vector<double>> k(7, std::vector<double>(ny));
    std::copy(s0.q.begin(), s0.q.end(), y.begin());
    std::copy(s0.p.begin(), s0.p.end(), y.begin() + n);

    double t = 0.0;
    if (!flow(y, k[0]))
        throw std::domain_error("vector field not finite at the initial state");

    // Initial step: crude norm balance, refined immediately by the controller.
    double ynorm = 0.0, fnorm = 0.0;
    for (std::size_t i = 0; i < ny; ++i) {
        ynorm = std::max(ynorm, std::fabs(y[i]));
        fnorm = std::max(fnorm, std::fabs(k[0][i]));
    }
    double h = 0.01 * (1.0 + ynorm) / (1.0 + fnorm);
    h = std::min(h, t_end);

    // The controller aims two orders below the requested tolerance: local
    // errors accumulate over the ~10^4 steps of a 50-period run, and the
    // delivered contract is on the accumulated drift, not the step error.
    const double rtol = 0.01 * opt.rel_tol;
    const double atol = 0.01 * opt.abs_tol;
    const double safe = 0.9, beta = 0.04;
    const double expo1 = 0.2 - beta * 0.75;
    const double facc1 = 1.0 / 0.2, facc2 = 1.0 / 10.0;
    double facold = 1e-4;
    const double hmin = 1e-14 * t_end;

    std::size_t nstep = 0;
    bool last = false;
    while (t < t_end) {
        if (++nstep > opt.max_steps) {
            sol.complete_ = false;
            sol.diagnostic_ = "step budget exhausted";
            break;
        }
        if (t + h >= t_end) {
            h = t_end - t;
            last = true;
        }

        bool finite = true;
        auto stage = [&](int s, std::initializer_list<double> a) {
            for (std::size_t i = 0; i < ny; ++i) {
                double acc = 0.0;
                int j = 0;
                for (double aij : a) acc += aij * k[j++][i];
                ytmp[i] = y[i] + h * acc;
            }
            finite &= flow(ytmp, k[s]);
        };
        stage(1, {a21});
        stage(2, {a31, a32});
        stage(3, {a41, a42, a43});
        stage(4, {a51, a52, a53, a54});
        stage(5, {a61, a62, a63, a64, a65});
        for (std::size_t i = 0; i < ny; ++i)
            ynew[i] = y[i] + h * (a71 * k[0][i] + a73 * k[2][i] + a74 * k[3][i] +
                                  a75 * k[4][i] + a76 * k[5][i]);
        finite &= flow(ynew, k[6]);
        for (std::size_t i = 0; i < ny; ++i)
            err[i] = h * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] +
                          e5 * k[4][i] + e6 * k[5][i] + e7 * k[6][i]);

        const double errn = finite
                                ? rms_scaled_error(err, y, ynew, atol, rtol)
                                : std::numeric_limits<double>::infinity();
        const double fac11 =
            std::isfinite(errn) ? std::pow(std::max(errn, 1e-16), expo1) : 10.0;

        if (errn <= 1.0) {
            // accept: record the dense-output segment
            DenseSolution::Segment sg;
            sg.t0 = t;
            sg.h = h;
            sg.r1.assign(y.begin(), y.end());
            sg.r2.resize(ny);
            sg.r3.resize(ny);
            sg.r4.resize(ny);
            sg.r5.resize(ny);
            for (std::size_t i = 0; i < ny; ++i) {
                const double ydiff = ynew[i] - y[i];
                const double bspl = h * k[0][i] - ydiff;
                sg.r2[i] = ydiff;
                sg.r3[i] = bspl;
                sg.r4[i] = ydiff - h * k[6][i] - bspl;
                sg.r5[i] = h * (d1 * k[0][i] + d3 * k[2][i] + d4 * k[3][i] +
                                d5 * k[4][i] + d6 * k[5][i] + d7 * k[6][i]);
            }
            sol.segments.push_back(std::move(sg));

            facold = std::max(errn, 1e-4);
            std::swap(y, ynew);
            std::swap(k[0], k[6]);  // FSAL
            t += h;
            sol.t_end_ = t;
            if (last) break;
            double fac = fac11 / std::pow(facold, beta);
            fac = std::max(facc2, std::min(facc1, fac / safe));
            h = h / fac;
        } else {
            last = false;
            h = h / std::min(facc1, fac11 / safe);
            if (h < hmin) {
                sol.complete_ = false;
                sol.diagnostic_ =
                    "step size collapsed (singular encounter) at t = " +
                    std::to_string(t);
                break;
            }
        }
    }
    if (sol.segments.empty())
        throw std::domain_error("integration failed before the first step: " +
                                sol.diagnostic_);
    return sol;
}

double Trajectory::ledger_drift(std::size_t fn) const {
    if (ledger.empty()) return 0.0;
    const double f0 = ledger.front()[fn];
    double worst = 0.0;
    for (const auto& row : ledger)
        worst = std::max(worst, std::fabs(row[fn] - f0));
    return worst / (1.0 + std::fabs(f0));
}

double Trajectory::max_ledger_drift() const {
    double worst = 0.0;
    for (std::size_t j = 0; j < ledger_names.size(); ++j)
        worst = std::max(worst, ledger_drift(j));
    return worst;
}

Trajectory integrate_trajectory(const ModelSpec& model, const PhaseState& s0,
                                double t_end, double tol, std::size_t samples,
                                const std::vector<PhaseFunction>* ledger_fns) {
    IntegratorOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = 0.01 * tol;
    auto dense = std::make_shared<DenseSolution>(
        integrate_dense(model, s0, t_end, opt));

    std::vector<PhaseFunction> default_ledger;
    if (!ledger_fns) {
        default_ledger = conserved_set(model);
        ledger_fns = &default_ledger;
    }

    Trajectory traj;
    traj.complete = dense->complete();
    traj.diagnostic = dense->diagnostic();
    for (const auto& f : *ledger_fns) traj.ledger_names.push_back(f.name());

    const double span = dense->t_end() - dense->t_begin();
    const std::size_t m = std::max<std::size_t>(samples, 2);
    traj.times.reserve(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        const double t =
            dense->t_begin() + span * static_cast<double>(i) / m;
        PhaseState s = dense->eval(t);
        std::vector<double> row(ledger_fns->size());
        for (std::size_t j = 0; j < ledger_fns->size(); ++j)
            row[j] = (*ledger_fns)[j].value(s);
        traj.times.push_back(t);
        traj.states.push_back(std::move(s));
        traj.ledger.push_back(std::move(row));
    }
    traj.dense = std::move(dense);
    return traj;
}

double characteristic_period(const ModelSpec& model, const PhaseState& s0) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (model.oscillator_like()) return two_pi / model.omega;
    const double e = hamiltonian(model, s0);
    if (e < 0.0) return two_pi * model.k / std::pow(2.0 * std::fabs(e), 1.5);
    return two_pi;
}

namespace {

double distance_to(const DenseSolution& dense, double t,
                   const std::vector<double>& z0, std::vector<double>& buf) {
    dense.eval(t, buf);
    double acc = 0.0;
    for (std::size_t i = 0; i < buf.size(); ++i) {
        const double d = buf[i] - z0[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

}  // namespace

ClosureResult detect_closure(const Trajectory& traj, double tol) {
    if (!traj.dense) throw std::invalid_argument("trajectory lacks dense output");
    const DenseSolution& dense = *traj.dense;
    ClosureResult out;

    // Boundedness heuristic on the stored samples.
    const double q0 = traj.states.front().q_norm();
    double qmax = 0.0;
    for (const auto& s : traj.states) qmax = std::max(qmax, s.q_norm());
    if (qmax > 50.0 * (1.0 + q0)) {
        out.verdict = ClosureResult::Verdict::Unbounded;
        return out;
    }

    const double span = dense.t_end() - dense.t_begin();
    const double t0 = dense.t_begin() + 0.01 * span;
    std::vector<double> z0, buf;
    dense.eval(t0, z0);

    // Sample the distance-to-anchor function finely enough that every
    // return dip covers several samples.
    const std::size_t m = std::min<std::size_t>(
        1 << 21, std::max<std::size_t>(1 << 14, dense.segments.size() * 16));
    const double dt = (dense.t_end() - t0) / static_cast<double>(m);

    double scale = 0.0;
    std::vector<double> d(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        d[i] = distance_to(dense, t0 + i * dt, z0, buf);
        scale = std::max(scale, d[i]);
    }
    const double escape = std::max(0.05 * scale, 50.0 * tol);

    double best = std::numeric_limits<double>::infinity();
    bool escaped = false;
    for (std::size_t i = 1; i + 1 <= m; ++i) {
        if (!escaped) {
            escaped = d[i] > escape;
            continue;
        }
        if (!(d[i] <= d[i - 1] && d[i] <= d[i + 1])) continue;
        // Golden-section refinement of the local minimum.
        double a = t0 + (i - 1) * dt, b = t0 + (i + 1) * dt;
        constexpr double invphi = 0.6180339887498949;
        double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
        double f1 = distance_to(dense, x1, z0, buf);
        double f2 = distance_to(dense, x2, z0, buf);
        for (int it = 0; it < 80 && (b - a) > 1e-13 * span; ++it) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - invphi * (b - a);
                f1 = distance_to(dense, x1, z0, buf);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + invphi * (b - a);
                f2 = distance_to(dense, x2, z0, buf);
            }
        }
        const double tmin = 0.5 * (a + b);
        const double dmin = distance_to(dense, tmin, z0, buf);
        best = std::min(best, dmin);
        if (dmin < tol) {
            out.verdict = ClosureResult::Verdict::Closed;
            out.period = tmin - t0;
            out.mismatch = dmin;
            return out;
        }
    }
    out.verdict = ClosureResult::Verdict::Open;
    out.mismatch = std::isfinite(best) ? best : scale;
    return out;
}

}  // namespace superint::classical
