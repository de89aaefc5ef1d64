#pragma once

// Named check suites for the command line and the acceptance run.

#include <cstdint>
#include <string>
#include <vector>

#include "cpq/report.hpp"

namespace cpq {

struct SuiteParams {
    int N = 1;
    /// Copies for the collinearity and stability checks.
    int m = 4;
    int samples = 100;
    std::uint64_t seed = 1;
};

/// rmatrix ambient cpn-relations kahler volume integrate poisson qgroup
/// braiding collinearity cross-ratio invariant engine, and "all".
std::vector<std::string> suite_names();

/// Runs the suite's checks on up to `jobs` threads; entries sorted by id.
/// UnknownSuite for a bad name, PreconditionViolated when the suite does not
/// apply at N (cross-ratio needs N = 1). "all" skips suites that do not apply.
Report run_suite(const std::string& name, const SuiteParams& p, int jobs = 1);

}  // namespace cpq
