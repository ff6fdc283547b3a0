/** \file verify.hpp
    \brief Seeded verification suites: curvature oracle, conformal-derivative
           cross-checks, deformation limits, Poisson-bracket and involution
           suites, the Fradkin trace identity and functional-independence
           ranks.  Shared by the command-line `verify` command and the
           acceptance tests.
*/
#ifndef SUPERINT_VERIFY_HPP
#define SUPERINT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "superint/model.hpp"

namespace superint::verify {

struct CheckResult {
    std::string suite;   ///< e.g. "curvature", "bracket", "rank"
    std::string name;    ///< individual check label
    double measured;     ///< worst observed magnitude (or count)
    double bound;        ///< acceptance bound on `measured`
    bool pass;
    bool larger_is_better = false;  ///< rank-style checks use >=
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int samples = 100;          ///< random states per bracket/rank check
    std::vector<int> dims = {2, 3, 4};
    std::string tamper;         ///< test hook; "" or "fradkin-sign"
};

/// Runs every suite on all four families and returns one row per check.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace superint::verify

#endif
