#pragma once

/*
 * Cost accounting for fixed-point attacks scaled up to a 257-round,
 * 256-bit-block cipher built from highly iterated permutations
 * (k = 1081080 iterations per round in the reference construction).
 *
 * The empirical miss probabilities feeding the model are pinned constants
 * measured once at n = 10^4 (see kMissTable); their theoretical
 * counterparts are PGF evaluations, and the two are cross-checked in tests.
 */

#include <cstdint>
#include <vector>

#include "permcycle/rational.hpp"
#include "permcycle/real.hpp"

namespace permcycle {

// measured P[search of an n/64 fraction finds no fixed point] at n = 10^4
struct MissTable {
    double randomPermutation = 0.985041; // k = 1, the null model
    double alice = 0.797284;             // k = 10^6
    double bob = 0.984409;               // k = 1081079 (prime)
    double charlie = 0.418335;           // k = 1081080 (highly composite)
};
inline constexpr MissTable kMissTable{};

// P[>= 2 of the c fixed points land in a known eta-fraction, c ~ Poisson(1)]:
//   sum_{c>=2} (1/(c! e)) (1 - (1-eta)^c - c eta (1-eta)^{c-1})
HighPrecisionReal bard_success(const BigRational& eta, int precisionBits);

// eta with bard_success(eta) / bard_success(1) = 1/2, by bisection on
// dyadic rationals to 2^-precisionBits
HighPrecisionReal bard_half_success_eta(int precisionBits);

// tau(k) * fraction, exact: expected fixed points of pi^k inside a
// uniformly chosen fraction of the domain
BigRational expected_fixpoints_in_fraction(std::uint64_t k, const BigRational& fraction);

// balanced distinguisher between "cipher" and "random permutation":
// accuracy = P(found | cipher)/2 + P(none | random)/2
double distinguisher_accuracy(double pFoundCipher, double pNoFixRandom);

// Key-recovery cost for the scaled-up construction, n = number of
// fixed-point filtering runs.  All sizes are log2.
struct KeyRecoveryCost {
    unsigned runs = 0;              // n
    double stage1Log2 = 0;          // filtering work
    double stage2Log2 = 0;          // residual brute force
    double totalLog2 = 0;           // log2(2^stage1 + 2^stage2)
    double candidateListLog2 = 0;   // log2(miss^n (2^256 - 1) + success^n)
    double successProbability = 0;  // 0.581665^n
    double successLog2 = 0;
    // log2 speedup over brute force run at the same success probability
    double speedupLog2 = 0;
    bool noFiltering = false;       // n == 0: candidate list is all of 2^256
};

KeyRecoveryCost key_recovery_cost(unsigned runs);

// argmax over n of speedupLog2 (success-adjusted), scanning n = 0..maxRuns
KeyRecoveryCost key_recovery_optimize(unsigned maxRuns = 200);

} // namespace permcycle
