#include "permcycle/costmodel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "permcycle/divisors.hpp"

namespace permcycle {

namespace {

// log2(2^a + 2^b) without overflow
double log2_sum(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp2(lo - hi)) / std::numbers::ln2;
}

// per-candidate filtering cost and full brute-force cost, log2
double stage1_constant() { return std::log2(1081084.0) + 122.0 + 256.0; }
double brute_force_log2() { return std::log2(12.0 * 1081082.0) + 512.0; }

} // namespace

HighPrecisionReal bard_success(const BigRational& eta, int precisionBits) {
    if (eta < 0 || eta > 1) throw std::domain_error("eta must lie in [0, 1]");

    // exact rational partial sum; the bracket is a probability, so the tail
    // beyond c = C is below sum_{c>C} 1/c! < 2/(C+1)!
    const BigRational oneMinus = BigRational(1) - eta;
    BigRational sum = 0;
    BigRational powPrev = oneMinus;  // (1 - eta)^(c-1)
    BigInt cFactorial = 2;
    for (unsigned c = 2;; ++c) {
        if (c > 2) cFactorial *= c;
        const BigRational powC = powPrev * oneMinus;
        const BigRational bracket =
            BigRational(1) - powC - BigRational(c) * eta * powPrev;
        sum += bracket / BigRational(cFactorial);

        BigInt next = cFactorial * (c + 1);
        if (mpz_sizeinbase(next.get_mpz_t(), 2) >
            static_cast<std::size_t>(precisionBits) + 10)
            break;
        powPrev = powC;
    }
    return HighPrecisionReal::from_rational(sum, precisionBits) *
           exp_hp(BigRational(-1), precisionBits);
}

HighPrecisionReal bard_half_success_eta(int precisionBits) {
    const int workBits = precisionBits + 16;
    const HighPrecisionReal target =
        bard_success(BigRational(1), workBits) / HighPrecisionReal::from_long(2, workBits);

    // bard_success is increasing in eta, so bisect on exact dyadic rationals
    BigRational lo = 0;
    BigRational hi = 1;
    for (int i = 0; i <= precisionBits; ++i) {
        const BigRational mid = (lo + hi) / 2;
        if (bard_success(mid, workBits).compare(target) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return HighPrecisionReal::from_rational((lo + hi) / 2, precisionBits);
}

BigRational expected_fixpoints_in_fraction(std::uint64_t k, const BigRational& fraction) {
    if (fraction < 0 || fraction > 1) throw std::domain_error("fraction must lie in [0, 1]");
    const DivisorProfile prof = divisor_profile(k);
    return BigRational(static_cast<unsigned long>(prof.tau)) * fraction;
}

double distinguisher_accuracy(double pFoundCipher, double pNoFixRandom) {
    if (pFoundCipher < 0 || pFoundCipher > 1 || pNoFixRandom < 0 || pNoFixRandom > 1)
        throw std::domain_error("probabilities must lie in [0, 1]");
    return 0.5 * pFoundCipher + 0.5 * pNoFixRandom;
}

KeyRecoveryCost key_recovery_cost(unsigned runs) {
    const double q = 1.0 - kMissTable.randomPermutation; // wrong key survives a run
    const double s = 1.0 - kMissTable.charlie;           // right key survives a run
    const double lq = std::log2(q);
    const double ls = std::log2(s);

    KeyRecoveryCost cost;
    cost.runs = runs;
    cost.noFiltering = (runs == 0);

    // run j filters the q^j fraction of the list that survived runs 0..j-1
    double geometric = 0;
    for (unsigned j = 0; j < runs; ++j) geometric += std::exp2(lq * j);
    cost.stage1Log2 = runs == 0 ? -std::numeric_limits<double>::infinity()
                                : stage1_constant() + std::log2(geometric);

    cost.stage2Log2 = brute_force_log2() + runs * lq;
    cost.totalLog2 = log2_sum(cost.stage1Log2, cost.stage2Log2);

    cost.candidateListLog2 =
        std::log2(std::exp2(runs * lq) * (std::exp2(256.0) - 1.0) + std::exp2(runs * ls));
    cost.successLog2 = runs * ls;
    cost.successProbability = std::exp2(cost.successLog2);
    // brute force reaching the same success probability tries s^n of the keyspace
    cost.speedupLog2 = (brute_force_log2() + runs * ls) - cost.totalLog2;
    return cost;
}

KeyRecoveryCost key_recovery_optimize(unsigned maxRuns) {
    KeyRecoveryCost best = key_recovery_cost(0);
    for (unsigned n = 1; n <= maxRuns; ++n) {
        const KeyRecoveryCost c = key_recovery_cost(n);
        if (c.speedupLog2 > best.speedupLog2) best = c;
    }
    return best;
}

} // namespace permcycle
