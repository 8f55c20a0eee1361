#pragma once

/*
 * Divisor bookkeeping.  Everything here is trial division up to sqrt(k);
 * the k values this library meets are desk-scale (about 10^7), so there is
 * no need for factorization machinery.
 */

#include <cstdint>
#include <vector>

#include "permcycle/rational.hpp"

namespace permcycle {

struct DivisorProfile {
    std::uint64_t k = 0;
    std::vector<std::uint64_t> divisors; // ascending, starts at 1, ends at k
    std::uint64_t tau = 0;               // divisor count
    BigInt sigma;                        // divisor sum (can exceed 64 bits)

    // sigma/k in lowest terms, equals sum of 1/d over divisors d
    BigRational sigma_over_k() const;
};

// requires k >= 1
DivisorProfile divisor_profile(std::uint64_t k);

} // namespace permcycle
