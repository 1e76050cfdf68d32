#ifndef RIESZ_VERIFY_HPP
#define RIESZ_VERIFY_HPP

#include <string>
#include <vector>

namespace riesz {

/// One row of the verification table.
struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

/// Runs the full verification suite over the catalog: special-function
/// identities, transform round trips, abscissa estimates, growth profiles,
/// and the mean-stability checks, each with its pinned tolerance.
std::vector<CheckResult> run_verification();

} // namespace riesz

#endif
