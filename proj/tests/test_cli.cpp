#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* env = std::getenv("SUPERINT_BIN");
    REQUIRE_MESSAGE(env != nullptr,
                    "SUPERINT_BIN not set; run through ctest");
    return env;
}

struct Run {
    int exit_code;
    fs::path dir;
};

// Runs the CLI with the working/output directory redirected into a fresh
// scratch directory.
Run run_cli(const std::string& args, const std::string& tag) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() /
                         ("superint_cli_" + tag + "_" +
                          std::to_string(::getpid()) + "_" +
                          std::to_string(counter++));
    fs::create_directories(dir);
    const std::string cmd = "SUPERINT_OUT_DIR=" + dir.string() + " " +
                            binary() + " " + args + " > " +
                            (dir / "stdout.txt").string() + " 2> " +
                            (dir / "stderr.txt").string();
    const int raw = std::system(cmd.c_str());
    return {WEXITSTATUS(raw), dir};
}

struct Csv {
    std::map<std::string, std::string> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    int col(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return static_cast<int>(i);
        return -1;
    }
};

Csv read_csv(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE_MESSAGE(is.good(), "missing output file " << p.string());
    Csv out;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find(" = ");
            if (eq != std::string::npos)
                out.meta[line.substr(2, eq - 2)] = line.substr(eq + 3);
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!have_header) {
            out.columns = cells;
            have_header = true;
        } else {
            out.rows.push_back(cells);
        }
    }
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("spectrum: deformed oscillator table reproduces reference values") {
    const auto r = run_cli("spectrum --model darboux3 --lambda 0.01 --nmax 25",
                           "osc");
    CHECK(r.exit_code == 0);
    const Csv t = read_csv(r.dir / "spectrum.csv");
    REQUIRE(t.rows.size() == 26);
    REQUIRE(t.col("energy") >= 0);
    const double e0 = std::stod(t.rows[0][t.col("energy")]);
    CHECK(std::fabs(e0 - 1.48) <= 0.005);
    CHECK(std::stod(t.rows[0][t.col("threshold")]) ==
          doctest::Approx(50.0).epsilon(1e-12));
    CHECK(t.meta.at("model") == "darboux3");
    CHECK(t.meta.at("version").size() > 0);
}

TEST_CASE("spectrum: hydrogenic column at eta = 0 and deformed ground state") {
    const auto r = run_cli("spectrum --model taubnut --eta 0 --nmax 5", "hyd");
    CHECK(r.exit_code == 0);
    const Csv t = read_csv(r.dir / "spectrum.csv");
    REQUIRE(t.rows.size() == 6);
    for (int nn = 0; nn <= 5; ++nn) {
        const double e = std::stod(t.rows[nn][t.col("energy")]);
        CHECK(e == doctest::Approx(-0.5 / ((nn + 1.0) * (nn + 1.0)))
                       .epsilon(1e-12));
    }

    const auto r2 =
        run_cli("spectrum --model taubnut --eta 1 --nmax 3", "hyd1");
    CHECK(r2.exit_code == 0);
    const Csv t2 = read_csv(r2.dir / "spectrum.csv");
    REQUIRE(t2.rows.size() == 4);
    CHECK(std::stod(t2.rows[0][t2.col("energy")]) ==
          doctest::Approx(-0.26794919243112).epsilon(1e-9));
}

TEST_CASE("verify: reports are deterministic and pass by default") {
    const auto a = run_cli("verify --seed 42 --samples 40 --dims 2,3", "va");
    const auto b = run_cli("verify --seed 42 --samples 40 --dims 2,3", "vb");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    const std::string ra = slurp(a.dir / "verify.csv");
    const std::string rb = slurp(b.dir / "verify.csv");
    CHECK(ra.size() > 0);
    CHECK(ra == rb);  // byte identical

    const Csv t = read_csv(a.dir / "verify.csv");
    CHECK(t.meta.at("overall") == "pass");
    CHECK(t.meta.at("seed") == "42");
    for (const auto& row : t.rows) CHECK(row[t.col("pass")] == "1");
}

TEST_CASE("verify: a tampered integral is caught with exit code 1") {
    const auto r = run_cli(
        "verify --seed 42 --samples 20 --dims 3 --tamper fradkin-sign", "vt");
    CHECK(r.exit_code == 1);
    const Csv t = read_csv(r.dir / "verify.csv");
    CHECK(t.meta.at("overall") == "fail");
    bool some_bracket_failed = false;
    for (const auto& row : t.rows)
        if (row[t.col("suite")] == "bracket" && row[t.col("pass")] == "0")
            some_bracket_failed = true;
    CHECK(some_bracket_failed);
}

TEST_CASE("usage and domain errors exit with code 2") {
    CHECK(run_cli("spectrum --model nosuch", "bad1").exit_code == 2);
    CHECK(run_cli("spectrum --model darboux3 --lambda -0.5", "bad2").exit_code ==
          2);
    CHECK(run_cli("trajectory --model taubnut --eta 0.5 --q 0,0,0 --p 1,0,0",
                  "bad3")
              .exit_code == 2);
}

TEST_CASE("json output mirrors the csv table with named fields") {
    const auto r = run_cli(
        "spectrum --model darboux3 --lambda 0.02 --nmax 3 --format json --out "
        "spec.json",
        "json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(r.dir / "spec.json"));
    CHECK(j.at("meta").at("model") == "darboux3");
    REQUIRE(j.at("rows").size() == 4);
    CHECK(j.at("rows")[0].at("n") == 0);
    const double e0 = j.at("rows")[0].at("energy").get<double>();
    CHECK(std::fabs(e0 - 1.46) <= 0.005);
    // Same column set as csv.
    const auto rcsv =
        run_cli("spectrum --model darboux3 --lambda 0.02 --nmax 3", "jsoncsv");
    const Csv t = read_csv(rcsv.dir / "spectrum.csv");
    REQUIRE(j.at("columns").size() == t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        CHECK(j.at("columns")[i].get<std::string>() == t.columns[i]);
}

TEST_CASE("trajectory: flat oscillator closes with period 2 pi") {
    const auto r = run_cli(
        "trajectory --model darboux3 --lambda 0 -N 2 --q 1,0 --p 0,1 "
        "--t-end 40 --samples 64",
        "traj");
    CHECK(r.exit_code == 0);
    const Csv t = read_csv(r.dir / "trajectory.csv");
    CHECK(t.meta.at("closed") == "1");
    CHECK(std::stod(t.meta.at("period")) ==
          doctest::Approx(2 * 3.14159265358979).epsilon(1e-6));
    CHECK(t.rows.size() == 65);
    // Ledger drift columns present in the metadata block.
    CHECK(t.meta.count("drift[H]") == 1);
}

TEST_CASE("sweeps add one block of rows per deformation value") {
    const auto r = run_cli(
        "spectrum --model darboux3 --lambda 0 --sweep 0.01,0.02,0.04 --nmax 25",
        "sweep");
    CHECK(r.exit_code == 0);
    const Csv t = read_csv(r.dir / "spectrum.csv");
    REQUIRE(t.rows.size() == 4 * 26);
    // Asymptotes per the reference figure: inf, 50, 25, 12.5.
    CHECK(t.rows[0][t.col("threshold")] == "inf");
    CHECK(std::stod(t.rows[26][t.col("threshold")]) ==
          doctest::Approx(50.0).epsilon(1e-12));
    CHECK(std::stod(t.rows[52][t.col("threshold")]) ==
          doctest::Approx(25.0).epsilon(1e-12));
    CHECK(std::stod(t.rows[78][t.col("threshold")]) ==
          doctest::Approx(12.5).epsilon(1e-12));
}
