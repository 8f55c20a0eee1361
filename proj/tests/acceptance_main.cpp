// Runs the full acceptance battery and exits nonzero if any criterion fails.

#include <iostream>

#include "permcycle/acceptance.hpp"

int main() {
    const auto results = permcycle::run_acceptance({}, std::cout);
    if (permcycle::all_passed(results)) {
        std::cout << "all " << results.size() << " criteria passed\n";
        return 0;
    }
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << failed << " of " << results.size() << " criteria failed\n";
    return 1;
}
