/** \file superint_main.cpp
    \brief Command-line front end: closed-form spectra, verification suites,
           trajectory runs and radial cross-validation, emitted as CSV/JSON.

    Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
*/
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superint/crosscheck.hpp"
#include "superint/integrate.hpp"
#include "superint/io.hpp"
#include "superint/model.hpp"
#include "superint/radial.hpp"
#include "superint/spectrum.hpp"
#include "superint/verify.hpp"
#include "superint/version.hpp"

namespace {

using namespace superint;

struct CommonOpts {
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& c, const std::string& default_out) {
    c.out = default_out;
    cmd->add_option("--out", c.out,
                    "output file; '-' writes to stdout (default: " +
                        default_out + ")");
    cmd->add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

std::string out_dir() {
    const char* env = std::getenv("SUPERINT_OUT_DIR");
    return env ? env : "";
}

void emit(const CommonOpts& c, const io::Table& t) {
    io::write_file(c.out, out_dir(), t, io::parse_format(c.format));
    if (c.out != "-") std::cerr << "wrote: " << c.out << "\n";
}

std::string join_doubles(const std::vector<double>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << io::num(v[i]);
    return os.str();
}

struct ModelOpts {
    std::string model = "darboux3";
    double lambda = 0.0, eta = 0.0, xi = 0.0, zeta = 0.0;
    double omega = 1.0, k = 1.0, hbar = 1.0;
    int dim = 3;

    void add(CLI::App* cmd, bool all_families) {
        auto valid = all_families
                         ? CLI::IsMember({"darboux3", "taubnut", "darboux3xi",
                                          "darboux4"})
                         : CLI::IsMember({"darboux3", "taubnut"});
        cmd->add_option("--model", model, "model family")->check(valid);
        cmd->add_option("--lambda", lambda, "oscillator deformation");
        cmd->add_option("--eta", eta, "Coulomb deformation");
        if (all_families) {
            cmd->add_option("--xi", xi, "second oscillator deformation");
            cmd->add_option("--zeta", zeta, "second Coulomb deformation");
        }
        cmd->add_option("--omega", omega, "oscillator frequency");
        cmd->add_option("--k", k, "Coulomb coupling");
        cmd->add_option("--hbar", hbar, "Planck constant");
        cmd->add_option("-N,--dim", dim, "spatial dimension (>= 2)");
    }

    ModelSpec build() const {
        const Family f = parse_family(model);
        switch (f) {
            case Family::DarbouxIII:
                return ModelSpec::darboux3(lambda, omega, dim, hbar);
            case Family::TaubNut:
                return ModelSpec::taubnut(eta, k, dim, hbar);
            case Family::DarbouxIIIXi:
                return ModelSpec::darboux3xi(lambda, xi, omega, dim, hbar);
            case Family::DarbouxIV:
                return ModelSpec::darboux4(eta, zeta, k, dim, hbar);
        }
        throw std::invalid_argument("unknown family");
    }

    void describe(io::Table& t) const {
        t.meta_entry("model", model);
        const Family f = parse_family(model);
        if (f == Family::DarbouxIII || f == Family::DarbouxIIIXi) {
            t.meta_entry("lambda", io::num(lambda));
            if (f == Family::DarbouxIIIXi) t.meta_entry("xi", io::num(xi));
            t.meta_entry("omega", io::num(omega));
        } else {
            t.meta_entry("eta", io::num(eta));
            if (f == Family::DarbouxIV) t.meta_entry("zeta", io::num(zeta));
            t.meta_entry("k", io::num(k));
        }
        t.meta_entry("hbar", io::num(hbar));
        t.meta_entry("dim", std::to_string(dim));
    }
};

io::Table make_table(const std::string& command) {
    io::Table t;
    t.meta_entry("tool", "superint");
    t.meta_entry("version", kVersion);
    t.meta_entry("command", command);
    return t;
}

// ---- spectrum ------------------------------------------------------------

int cmd_spectrum(const ModelOpts& mo, const std::vector<double>& sweep,
                 int n_max, const CommonOpts& common) {
    const Family family = parse_family(mo.model);
    const bool oscillator = family == Family::DarbouxIII;

    io::Table t = make_table("spectrum");
    mo.describe(t);
    t.meta_entry(oscillator ? "lambda_sweep" : "eta_sweep",
                 join_doubles(sweep));
    t.meta_entry("nmax", std::to_string(n_max));
    t.columns = {oscillator ? "lambda" : "eta",
                 "n",
                 "energy",
                 oscillator ? "omega_deformed" : "k_deformed",
                 "degeneracy",
                 "threshold"};

    for (double par : sweep) {
        ModelOpts one = mo;
        (oscillator ? one.lambda : one.eta) = par;
        const ModelSpec m = one.build();
        for (const auto& e : spectrum::spectrum_table(m, n_max))
            t.row({io::num(par), std::to_string(e.n), io::num(e.energy),
                   io::num(e.deformed), std::to_string(e.degeneracy),
                   io::num(e.threshold)});
    }
    emit(common, t);
    return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const verify::VerifyOptions& opt, const CommonOpts& common) {
    const auto results = verify::run_verification(opt);
    const bool ok = verify::all_pass(results);

    io::Table t = make_table("verify");
    t.meta_entry("seed", std::to_string(opt.seed));
    t.meta_entry("samples", std::to_string(opt.samples));
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < opt.dims.size(); ++i)
            os << (i ? "," : "") << opt.dims[i];
        t.meta_entry("dims", os.str());
    }
    if (!opt.tamper.empty()) t.meta_entry("tamper", opt.tamper);
    t.meta_entry("overall", ok ? "pass" : "fail");
    t.columns = {"suite", "check", "measured", "bound", "pass"};
    for (const auto& r : results)
        t.row({r.suite, r.name, io::num(r.measured), io::num(r.bound),
               r.pass ? "1" : "0"});
    emit(common, t);

    if (!ok) {
        std::cerr << "verification FAILED:\n";
        for (const auto& r : results)
            if (!r.pass)
                std::cerr << "  " << r.suite << " / " << r.name
                          << ": measured " << io::num(r.measured)
                          << (r.larger_is_better ? " < " : " > ")
                          << io::num(r.bound) << "\n";
        return 1;
    }
    return 0;
}

// ---- trajectory -----------------------------------------------------------

int cmd_trajectory(const ModelOpts& mo, std::vector<double> q0,
                   std::vector<double> p0, double t_end, double tol,
                   std::size_t samples, double closure_tol,
                   const CommonOpts& common) {
    const ModelSpec m = mo.build();
    if (q0.size() != static_cast<std::size_t>(m.dim) || q0.size() != p0.size())
        throw std::invalid_argument(
            "--q and --p must each carry N components");
    classical::PhaseState s0(std::move(q0), std::move(p0));
    if (t_end <= 0.0)
        t_end = 50.0 * classical::characteristic_period(m, s0);

    const auto traj = classical::integrate_trajectory(m, s0, t_end, tol, samples);
    const auto closure = classical::detect_closure(traj, closure_tol);

    io::Table t = make_table("trajectory");
    mo.describe(t);
    t.meta_entry("t_end", io::num(t_end));
    t.meta_entry("tol", io::num(tol));
    t.meta_entry("closure_tol", io::num(closure_tol));
    t.meta_entry("complete", traj.complete ? "1" : "0");
    if (!traj.diagnostic.empty()) t.meta_entry("diagnostic", traj.diagnostic);
    using V = classical::ClosureResult::Verdict;
    t.meta_entry("closed", closure.verdict == V::Closed ? "1" : "0");
    if (closure.verdict == V::Unbounded) t.meta_entry("unbounded", "1");
    if (closure.verdict == V::Closed)
        t.meta_entry("period", io::num(closure.period));
    t.meta_entry("closure_mismatch", io::num(closure.mismatch));
    for (std::size_t j = 0; j < traj.ledger_names.size(); ++j)
        t.meta_entry("drift[" + traj.ledger_names[j] + "]",
                     io::num(traj.ledger_drift(j)));

    t.columns = {"t"};
    for (int i = 1; i <= m.dim; ++i) t.columns.push_back("q" + std::to_string(i));
    for (int i = 1; i <= m.dim; ++i) t.columns.push_back("p" + std::to_string(i));
    for (const auto& name : traj.ledger_names) t.columns.push_back(name);
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        std::vector<std::string> row;
        row.push_back(io::num_exact(traj.times[s]));
        for (double v : traj.states[s].q) row.push_back(io::num_exact(v));
        for (double v : traj.states[s].p) row.push_back(io::num_exact(v));
        for (double v : traj.ledger[s]) row.push_back(io::num_exact(v));
        t.row(std::move(row));
    }
    emit(common, t);
    return 0;
}

// ---- radial ----------------------------------------------------------------

int cmd_radial(const ModelOpts& mo, int l_max, int states, int npts,
               bool richardson, const CommonOpts& common) {
    const ModelSpec m = mo.build();
    const auto report =
        crosscheck::compare_radial_spectrum(m, l_max, states, npts, richardson);

    io::Table t = make_table("radial");
    mo.describe(t);
    t.meta_entry("lmax", std::to_string(l_max));
    t.meta_entry("states", std::to_string(states));
    t.meta_entry("npts", std::to_string(npts));
    t.meta_entry("richardson", richardson ? "1" : "0");
    t.meta_entry("threshold", io::num(radial::continuum_threshold(m)));
    t.meta_entry("max_rel_error", io::num(report.max_rel_error));
    t.meta_entry("degeneracy_spread", io::num(report.max_degeneracy_spread));
    t.meta_entry("convergence_order", io::num(report.convergence_order));
    t.meta_entry("complete", report.complete ? "1" : "0");
    t.columns = {"l",        "n_r",      "principal", "e_numeric",
                 "e_closed", "rel_error", "residual"};
    for (const auto& r : report.rows)
        t.row({std::to_string(r.l), std::to_string(r.n_r),
               std::to_string(r.principal), io::num(r.e_numeric),
               io::num(r.e_closed), io::num(r.rel_error), io::num(r.residual)});
    emit(common, t);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superint: numerical laboratory for maximally superintegrable "
                 "deformations of the oscillator and Coulomb systems"};
    app.set_version_flag("--version", std::string("superint ") + kVersion);
    app.require_subcommand(1);

    // spectrum
    auto* sp = app.add_subcommand("spectrum",
                                  "closed-form spectrum tables (deformed "
                                  "oscillator / Coulomb)");
    ModelOpts sp_model;
    sp_model.add(sp, /*all_families=*/false);
    std::vector<double> sp_sweep;
    sp->add_option("--sweep", sp_sweep,
                   "extra deformation values to sweep (adds rows per value)")
        ->delimiter(',');
    int sp_nmax = 25;
    sp->add_option("--nmax", sp_nmax, "largest principal quantum number");
    CommonOpts sp_common;
    add_common(sp, sp_common, "spectrum.csv");

    // verify
    auto* ve = app.add_subcommand("verify",
                                  "classical + geometric verification suites");
    verify::VerifyOptions ve_opt;
    ve->add_option("--seed", ve_opt.seed, "PRNG seed");
    ve->add_option("--samples", ve_opt.samples, "random states per check")
        ->check(CLI::PositiveNumber);
    ve->add_option("--dims", ve_opt.dims, "dimensions to test")->delimiter(',');
    ve->add_option("--tamper", ve_opt.tamper, "sensitivity hook (tests only)")
        ->group("");  // hidden
    CommonOpts ve_common;
    add_common(ve, ve_common, "verify.csv");

    // trajectory
    auto* tr = app.add_subcommand("trajectory",
                                  "integrate Hamilton's equations with a "
                                  "conserved-quantity ledger");
    ModelOpts tr_model;
    tr_model.add(tr, /*all_families=*/true);
    std::vector<double> tr_q, tr_p;
    tr->add_option("--q", tr_q, "initial position components")
        ->required()
        ->delimiter(',');
    tr->add_option("--p", tr_p, "initial momentum components")
        ->required()
        ->delimiter(',');
    double tr_tend = 0.0, tr_tol = 1e-10, tr_closure_tol = 1e-6;
    std::size_t tr_samples = 1024;
    tr->add_option("--t-end", tr_tend,
                   "integration span (default: 50 characteristic periods)");
    tr->add_option("--tol", tr_tol, "integrator relative tolerance");
    tr->add_option("--closure-tol", tr_closure_tol,
                   "phase-space tolerance for orbit closure");
    tr->add_option("--samples", tr_samples, "output samples");
    CommonOpts tr_common;
    add_common(tr, tr_common, "trajectory.csv");

    // radial
    auto* ra = app.add_subcommand("radial",
                                  "radial eigensolver vs closed-form spectrum");
    ModelOpts ra_model;
    ra_model.add(ra, /*all_families=*/false);
    int ra_lmax = 2, ra_states = 4, ra_npts = 4001;
    bool ra_no_rich = false;
    ra->add_option("--lmax", ra_lmax, "largest angular momentum");
    ra->add_option("--states", ra_states, "bound states per angular momentum");
    ra->add_option("--npts", ra_npts, "grid nodes");
    ra->add_flag("--no-richardson", ra_no_rich,
                 "single-grid energies (skip extrapolation)");
    CommonOpts ra_common;
    add_common(ra, ra_common, "radial.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) {
            const bool oscillator = parse_family(sp_model.model) == Family::DarbouxIII;
            std::vector<double> sweep{oscillator ? sp_model.lambda : sp_model.eta};
            for (double v : sp_sweep) sweep.push_back(v);
            return cmd_spectrum(sp_model, sweep, sp_nmax, sp_common);
        }
        if (ve->parsed()) return cmd_verify(ve_opt, ve_common);
        if (tr->parsed())
            return cmd_trajectory(tr_model, tr_q, tr_p, tr_tend, tr_tol,
                                  tr_samples, tr_closure_tol, tr_common);
        if (ra->parsed())
            return cmd_radial(ra_model, ra_lmax, ra_states, ra_npts,
                              !ra_no_rich, ra_common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
