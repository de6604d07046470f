#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace eqcoh {

struct AcceptanceOptions {
    std::size_t max_n = 8;                  // structure-constant sweeps
    std::size_t schubert_max_n = 10;        // canonical-class checks
    std::size_t weighted_class_max_n = 4;   // weighted canonical class sweep
    std::size_t weighted_struct_max_n = 5;  // weighted structure-constant sweep
    int kappa_trials = 300;
    int property_trials = 500;
    unsigned seed = 20240817;
    bool show_timings = false;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs every check, printing one pass/fail line per criterion to `log` as it
// completes.  Returns the full set of results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream& log);

}  // namespace eqcoh
