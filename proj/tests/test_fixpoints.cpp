#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "permcycle/fixpoints.hpp"
#include "permcycle/permutation.hpp"

using namespace permcycle;

namespace {

HighPrecisionReal hp_long(long v, int bits = 256) {
    return HighPrecisionReal::from_long(v, bits);
}

HighPrecisionReal hp_rat(const BigRational& q, int bits = 256) {
    return HighPrecisionReal::from_rational(q, bits);
}

} // namespace

TEST_CASE("cycle contribution to fixed points of the power") {
    CHECK(fixed_points_from_cycle(1, 7) == 1);
    CHECK(fixed_points_from_cycle(3, 6) == 3);
    CHECK(fixed_points_from_cycle(4, 6) == 0);
    CHECK(fixed_points_from_cycle(6, 6) == 6);
    CHECK(fixed_points_from_cycle(12, 6) == 0);
    CHECK(fixed_points_from_cycle(2, 1081080) == 2);
}

TEST_CASE("expected fixed points equal the divisor count") {
    for (std::uint64_t k = 1; k <= 24; ++k)
        CHECK(expected_fixed_points(k) == divisor_profile(k).tau);
    CHECK(expected_fixed_points(25) == 3);
    CHECK(expected_fixed_points(1000000) == 49);
    CHECK(expected_fixed_points(1081079) == 2);
    CHECK(expected_fixed_points(1081080) == 256);
}

TEST_CASE("k = 1 gives the Poisson(1) law") {
    const FixpointDistribution d = fixpoint_distribution(1, 10, 256);
    REQUIRE(d.probabilities.size() == 11);
    const HighPrecisionReal invE = exp_hp(BigRational(-1), 256);
    for (std::uint64_t c = 0; c <= 10; ++c) {
        const HighPrecisionReal want =
            invE * hp_rat(make_rational(BigInt(1), factorial(c)));
        CHECK((d.probabilities[c] - want).abs_less_than_pow2(-200));
    }
    // Poisson(1) mass beyond 30 is below 1/31!
    const FixpointDistribution wide = fixpoint_distribution(1, 30, 256);
    CHECK(wide.tailBound >= hp_long(0));
    CHECK(wide.tailBound.abs_less_than_pow2(-110));
}

TEST_CASE("k = 2 weights involution counts") {
    const FixpointDistribution d = fixpoint_distribution(2, 8, 256);
    CHECK(d.probabilities[0].to_string(8) == "0.22313016"); // e^{-3/2}
    CHECK(d.probabilities[3].to_string(8) == "0.14875344"); // (2/3) e^{-3/2}
    const std::uint64_t involutions[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
    for (std::uint64_t c = 0; c <= 8; ++c) {
        const HighPrecisionReal want =
            d.probabilities[0] *
            hp_rat(make_rational(BigInt(involutions[c]), factorial(c)));
        CHECK((d.probabilities[c] - want).abs_less_than_pow2(-200));
    }
}

TEST_CASE("distribution masses are a sub-probability with exact complement") {
    for (std::uint64_t k : {1ULL, 2ULL, 6ULL, 12ULL}) {
        const FixpointDistribution d = fixpoint_distribution(k, 40, 256);
        HighPrecisionReal sum = hp_long(0);
        for (const HighPrecisionReal& p : d.probabilities) {
            CHECK(p >= hp_long(0));
            sum = sum + p;
        }
        CHECK(sum <= hp_long(1));
        CHECK((sum + d.tailBound - hp_long(1)).abs_less_than_pow2(-200));
    }
}

TEST_CASE("distribution mean and PGF line up for full divisor coverage") {
    // all divisors of 6 are <= 60, so the truncated law is the real one
    const FixpointDistribution d = fixpoint_distribution(6, 60, 256);
    HighPrecisionReal mean = hp_long(0);
    for (std::uint64_t c = 0; c < d.probabilities.size(); ++c)
        mean = mean + hp_long(static_cast<long>(c)) * d.probabilities[c];
    CHECK((mean - hp_long(4)).abs().to_double() < 1e-9); // tau(6) = 4

    const HighPrecisionReal x = hp_rat(make_rational(1, 2));
    HighPrecisionReal viaMasses = hp_long(0);
    for (std::uint64_t c = d.probabilities.size(); c-- > 0;)
        viaMasses = viaMasses * x + d.probabilities[c];
    CHECK((viaMasses - pgf_eval(6, x)).abs().to_double() < 1e-9);
}

TEST_CASE("huge k: the empty-count mass is exp(-sigma/k)") {
    const FixpointDistribution d = fixpoint_distribution(1081080, 50, 256);
    const HighPrecisionReal want = exp_hp(make_rational(-4838400, 1081080), 256);
    CHECK((d.probabilities[0] - want).abs_less_than_pow2(-200));
    // every divisor of 1081080 that is <= 50 contributes; spot check c = 1
    // mass equals p0 (single fixed cycle of length 1)
    CHECK((d.probabilities[1] - d.probabilities[0]).abs_less_than_pow2(-200));
}

TEST_CASE("PGF endpoints and domain") {
    const int bits = 256;
    for (std::uint64_t k : {1ULL, 6ULL, 1081080ULL}) {
        CHECK((pgf_eval(k, hp_long(1, bits)) - hp_long(1, bits)).abs_less_than_pow2(-240));
        const HighPrecisionReal atZero = pgf_eval(k, hp_long(0, bits));
        const BigRational sigmaOverK = divisor_profile(k).sigma_over_k();
        CHECK((atZero - exp_hp(-sigmaOverK, bits)).abs_less_than_pow2(-240));
    }
    const HighPrecisionReal half = hp_rat(make_rational(1, 2), bits);
    CHECK((pgf_eval(1, half) - exp_hp(make_rational(-1, 2), bits)).abs_less_than_pow2(-240));
    CHECK_THROWS_AS(pgf_eval(3, hp_long(2, bits)), std::domain_error);
    CHECK_THROWS_AS(pgf_eval(3, hp_long(-1, bits)), std::domain_error);
}

TEST_CASE("exhaustive small-n means count divisors up to n") {
    for (std::size_t n : {4, 5, 6}) {
        for (std::uint64_t k : {4ULL, 6ULL, 12ULL}) {
            BigInt totalFixed = 0;
            std::uint64_t perms = 0;
            enumerate_permutations(n, [&](const Permutation& pi) {
                totalFixed += count_fixed_points(permutation_power(pi, k));
                ++perms;
            });
            std::uint64_t divisorsUpToN = 0;
            for (std::uint64_t d : divisor_profile(k).divisors)
                if (d <= n) ++divisorsUpToN;
            CHECK(make_rational(totalFixed, factorial(static_cast<unsigned long>(n))) ==
                  BigRational(static_cast<unsigned long>(divisorsUpToN)));
            CHECK(perms == factorial(static_cast<unsigned long>(n)));
        }
    }
}

TEST_CASE("pair expectations by threshold") {
    const int bits = 256;
    const HighPrecisionReal invE = exp_hp(BigRational(-1), bits);
    const HighPrecisionReal h113 = hp_rat(make_rational(113, 2), bits);

    const HighPrecisionReal t0 = restricted_pair_expectation(0, bits);
    CHECK((t0 - h113).abs().to_double() < 1e-9);

    const HighPrecisionReal t1 = restricted_pair_expectation(1, bits);
    CHECK((t1 - (h113 - hp_long(49, bits) * invE)).abs().to_double() < 1e-9);

    const HighPrecisionReal t2 = restricted_pair_expectation(2, bits);
    CHECK((t2 - (h113 - hp_long(105, bits) * invE)).abs().to_double() < 1e-9);
    CHECK(t2.to_double() == doctest::Approx(17.8724).epsilon(1e-4));
}

TEST_CASE("workload comparison report") {
    const int bits = 256;
    const WorkloadReport rep = restricted_workload_expectation(bits);
    REQUIRE(rep.candidates.size() == 4);

    const HighPrecisionReal invE = exp_hp(BigRational(-1), bits);
    const HighPrecisionReal one = hp_long(1, bits);
    const HighPrecisionReal pPos = one - invE;
    const HighPrecisionReal mRestricted = hp_long(8, bits) - hp_long(7, bits) * invE;
    const HighPrecisionReal pairRestricted =
        hp_rat(make_rational(113, 2), bits) - hp_long(49, bits) * invE;

    const HighPrecisionReal want[] = {mRestricted, mRestricted / pPos, pairRestricted,
                                      pairRestricted / pPos};
    for (int i = 0; i < 4; ++i)
        CHECK((rep.candidates[i].value - want[i]).abs().to_double() < 1e-9);

    const HighPrecisionReal reference =
        hp_rat(make_rational(113, 2), bits) - hp_long(46, bits) * invE;
    CHECK((rep.reference - reference).abs().to_double() < 1e-9);
    CHECK(rep.reference.to_double() == doctest::Approx(39.5775).epsilon(1e-4));

    // none of the natural formalizations reproduces the reference number
    CHECK(!rep.anyMatch);
    for (const WorkloadCandidate& c : rep.candidates) CHECK(!c.matchesReference);
}
