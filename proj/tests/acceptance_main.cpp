// Runs the full verification suite at its reference scale and reports one
// pass/fail line per criterion.  The process exit code is the number of
// failing criteria.

#include <iostream>

#include "eqcoh/acceptance.hpp"

int main() {
    eqcoh::AcceptanceOptions options;
    options.show_timings = true;
    const auto results = eqcoh::run_acceptance(options, std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    return failed;
}
