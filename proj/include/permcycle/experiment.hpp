#pragma once

/*
 * Monte Carlo estimation of how often a partial search through an iterated
 * random permutation misses every fixed point.  One trial samples pi from
 * S_n, decomposes it once, and for each requested k reads off
 *   c = number of fixed points of pi^k (cycle lengths dividing k)
 *   miss = (1 - c/n)^(n * fraction)
 * The trial loop is the OpenMP kernel; per-trial results land in a
 * preallocated slot indexed by trial, and the reduction runs afterwards in
 * trial order, so reports are identical for any worker count.
 */

#include <cstdint>
#include <vector>

#include "permcycle/permutation.hpp"

namespace permcycle {

// (1 - c/n)^(n * fraction)
double miss_probability(std::uint64_t c, std::size_t n, double fraction);

struct ExperimentConfig {
    std::size_t n = 10000;
    std::size_t trials = 10000;
    std::vector<std::uint64_t> ks;
    double fraction = 1.0 / 64.0;
    std::uint64_t seed = 1;
    int workers = 0; // 0 = library default
};

struct ExperimentRow {
    std::uint64_t k = 0;
    double meanMissProbability = 0;
    double standardError = 0; // of meanMissProbability
    double meanFixedPoints = 0;
    double fixedPointsStdError = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ExperimentRow> rows;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Serial reference: same trial streams, but materializes pi^k with
// permutation_power and counts fixed points directly instead of using the
// divisor rule on the length histogram.  Reports must match
// run_experiment exactly.
ExperimentReport run_experiment_reference(const ExperimentConfig& cfg);

} // namespace permcycle
