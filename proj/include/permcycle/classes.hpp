#pragma once

/*
 * Cycle-structure classes of permutations and their exponential generating
 * functions.  A class is cut out by a set A of allowed cycle lengths and a
 * set B of allowed cycle counts; its EGF is beta(alpha(z)) with
 *   alpha(z) = sum_{i in A} z^i / i,    beta(y) = sum_{t in B} y^t / t!.
 *
 * Classes that only prohibit finitely many cycle lengths have EGFs of the
 * shape q(z) exp(p(z)) / (1-z)^m (StructuredEGF below); for those, the
 * n -> infinity probability is read off exactly as q(1) exp(p(1)) when the
 * pole order m is 1.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "permcycle/rational.hpp"
#include "permcycle/real.hpp"
#include "permcycle/series.hpp"

namespace permcycle {

// Allowed cycle lengths (subsets of {1, 2, ...}).
struct CycleLengthSet {
    enum class Kind { Finite, AllExcept, All, DivisorsOf, PerfectPowers };
    Kind kind = Kind::All;
    std::set<std::uint64_t> lengths; // Finite: members; AllExcept: the prohibited ones
    std::uint64_t k = 0;             // DivisorsOf
    unsigned exponent = 0;           // PerfectPowers: {1, 2^e, 3^e, ...}

    static CycleLengthSet finite(std::set<std::uint64_t> s);
    static CycleLengthSet all_except(std::set<std::uint64_t> s);
    static CycleLengthSet all();
    static CycleLengthSet divisors_of(std::uint64_t k);
    static CycleLengthSet perfect_powers(unsigned e);

    bool contains(std::uint64_t len) const;
};

// Allowed cycle counts (subsets of {0, 1, 2, ...}).
struct CycleCountSet {
    enum class Kind { Finite, All };
    Kind kind = Kind::All;
    std::set<std::uint64_t> counts;

    static CycleCountSet finite(std::set<std::uint64_t> s);
    static CycleCountSet exactly(std::uint64_t t);
    static CycleCountSet all();

    bool contains(std::uint64_t count) const;
};

// q(z) exp(p(z)) / (1-z)^poleOrder with polynomial p, q
struct StructuredEGF {
    TruncatedSeries p; // exponent polynomial
    TruncatedSeries q; // prefactor polynomial
    unsigned poleOrder = 1;
};

// alpha(z) = sum_{i in A, i <= order} z^i / i
TruncatedSeries alpha_series(const CycleLengthSet& A, std::size_t order);

// EGF of the class (A, B) as a truncated series
TruncatedSeries class_egf_series(const CycleLengthSet& A, const CycleCountSet& B,
                                 std::size_t order);

// EGF of "no cycles with length in prohibited", optionally tagged with a
// z^c/c! prefactor (c marked cycles of length 1):
//   q(z) exp(-sum_{i in P} z^i/i) / (1-z)
StructuredEGF class_egf_structured(const std::set<std::uint64_t>& prohibited,
                                   std::optional<std::uint64_t> prefactorFixpoints = std::nullopt);

// lim_{z->1^-} (1-z) f(z) = q(1) exp(p(1)); requires poleOrder == 1,
// otherwise throws std::domain_error saying whether the limit is 0 or
// divergent
HighPrecisionReal limit_probability(const StructuredEGF& f, int precisionBits);

// expand q exp(p)/(1-z)^m to the given order
TruncatedSeries structured_expansion(const StructuredEGF& f, std::size_t order);

// one row per n: exact coefficient A_n/n! and its distance to the limit
struct ConvergenceRow {
    std::size_t n = 0;
    BigRational coefficient;
    HighPrecisionReal distance{64};
};

struct ConvergenceReport {
    HighPrecisionReal limit{64};
    std::vector<ConvergenceRow> rows;
};

ConvergenceReport convergence_report(const StructuredEGF& f, std::size_t order,
                                     int precisionBits);

// exp(-sum_{i in A} 1/i): limiting probability that a permutation has no
// cycle with length in the finite set A
HighPrecisionReal prob_no_cycles_in(const std::set<std::uint64_t>& A, int precisionBits);

// (1/(c1! c2!)) (7/8)^c2 e^{-15/8}: limiting joint probability of exactly
// c1 fixed points and c2 cycles with length in {2, 4, 8}
HighPrecisionReal joint_prob_c1_c2(std::uint64_t c1, std::uint64_t c2, int precisionBits);

// exp(-zeta(e)) for e in {2, 3}: no cycles of perfect e-th power length
HighPrecisionReal prob_no_powerlength_cycles(unsigned e, int precisionBits);

} // namespace permcycle
