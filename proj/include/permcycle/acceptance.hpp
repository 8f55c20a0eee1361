#pragma once

/*
 * Built-in acceptance battery: thirteen numbered end-to-end checks covering
 * the EGF calculator, the simulator, the cipher, the attacks, and the cost
 * model, with tolerances pinned in code.  The `paper-check` CLI subcommand
 * and the acceptance test binary both run this battery.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace permcycle {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail; // measured vs required
};

struct AcceptanceOptions {
    int workers = 0; // parallelism for simulation and attack criteria
};

// runs every criterion in order, streaming one PASS/FAIL line per criterion
// to `out` as results arrive
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace permcycle
