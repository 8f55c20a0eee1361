#pragma once

/*
 * Fixed points of iterated permutations.  x is fixed by pi^k exactly when x
 * lies on a cycle whose length divides k, so everything here reduces to
 * divisor structure: the expected count tends to tau(k), and the limiting
 * distribution of the count has PGF exp(sum_{i|k} (y^i - 1)/i).
 */

#include <cstdint>
#include <vector>

#include "permcycle/divisors.hpp"
#include "permcycle/rational.hpp"
#include "permcycle/real.hpp"
#include "permcycle/series.hpp"

namespace permcycle {

// number of fixed points of pi^k contributed by one cycle of length len
// (len if len | k, else 0)
std::uint64_t fixed_points_from_cycle(std::uint64_t len, std::uint64_t k);

// limiting expected number of fixed points of pi^k, i.e. tau(k).
// Cross-checked internally against the bivariate-series pipeline
//   a(y,z) = exp(sum_{i|k} (y^i - z^i)/i) / (1-z),
//   (1-z) * d/dy a | y=z  ==  sum_{i|k} z^{i-1}
// term by term; a mismatch throws std::logic_error.
std::uint64_t expected_fixed_points(std::uint64_t k);

struct FixpointDistribution {
    std::uint64_t k = 0;
    std::uint64_t cMax = 0;
    int precisionBits = 0;
    // probabilities[c] = limit Pr[pi^k has exactly c fixed points], c <= cMax
    std::vector<HighPrecisionReal> probabilities;
    // 1 - sum of the above (mass at c > cMax plus, when some divisors of k
    // exceed cMax, mass the truncated series cannot see)
    HighPrecisionReal tailBound{64};
};

// exact rational series exp(sum_{i|k, i<=cMax} y^i/i) scaled by
// e^{-sigma(k)/k}; divisors beyond cMax cannot influence coefficients
// c <= cMax, so each probability is exact up to one rounding
FixpointDistribution fixpoint_distribution(std::uint64_t k, std::uint64_t cMax,
                                           int precisionBits);

// PGF of the limiting fixed-point count at x in [0, 1]:
//   exp(sum_{i|k} (x^i - 1)/i)
HighPrecisionReal pgf_eval(std::uint64_t k, const HighPrecisionReal& x);

// E[ C(m,2) * 1{c1 >= threshold} ] where m = c1 + 8 c2 and (c1, c2) are
// independent Poisson(1), Poisson(7/8): direct grid summation, exact
// rationals with e^{-15/8} multiplied in once at the end.  The truncation
// tail is provably below 2^-64 at the grid size used.
HighPrecisionReal restricted_pair_expectation(std::uint64_t c1Threshold, int precisionBits);

// Candidate formalizations of a workload expectation restricted to c1 >= 1,
// each computed by direct summation and compared against a fixed reference
// value 113/2 - 46/e whose derivation is not pinned down anywhere.
struct WorkloadCandidate {
    const char* name;
    HighPrecisionReal value{64};
    bool matchesReference = false; // within 1e-6
};

struct WorkloadReport {
    HighPrecisionReal reference{64}; // 113/2 - 46/e
    std::vector<WorkloadCandidate> candidates;
    bool anyMatch = false;
};

WorkloadReport restricted_workload_expectation(int precisionBits);

} // namespace permcycle
