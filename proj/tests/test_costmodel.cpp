#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "permcycle/costmodel.hpp"

using namespace permcycle;

namespace {

double success_percent(int tenths) {
    return bard_success(make_rational(tenths, 10), 128).to_double() * 100.0;
}

} // namespace

TEST_CASE("pinned miss probabilities") {
    CHECK(kMissTable.randomPermutation == 0.985041);
    CHECK(kMissTable.alice == 0.797284);
    CHECK(kMissTable.bob == 0.984409);
    CHECK(kMissTable.charlie == 0.418335);
}

TEST_CASE("success curve reproduces the ten tabulated percentages") {
    const double want[] = {0.47, 1.75, 3.69,  6.16,  9.02,
                           12.19, 15.58, 19.12, 22.75, 26.42};
    for (int i = 1; i <= 10; ++i)
        CHECK(std::fabs(success_percent(i) - want[i - 1]) < 0.005);
}

TEST_CASE("success endpoints and shape") {
    const int bits = 128;
    const HighPrecisionReal full = bard_success(BigRational(1), bits);
    const HighPrecisionReal oneMinusTwoOverE =
        HighPrecisionReal::from_long(1, bits) -
        HighPrecisionReal::from_long(2, bits) * exp_hp(BigRational(-1), bits);
    CHECK((full - oneMinusTwoOverE).abs_less_than_pow2(-120));

    CHECK(bard_success(BigRational(0), bits).abs_less_than_pow2(-120));
    CHECK(bard_success(make_rational(1, 5), bits) < bard_success(make_rational(1, 2), bits));
    CHECK(bard_success(make_rational(1, 2), bits) < bard_success(make_rational(9, 10), bits));

    CHECK_THROWS_AS(bard_success(make_rational(-1, 10), bits), std::domain_error);
    CHECK_THROWS_AS(bard_success(make_rational(11, 10), bits), std::domain_error);

    // the series cutoff cannot depend on the requested precision
    CHECK((bard_success(make_rational(3, 7), 64) - bard_success(make_rational(3, 7), 256))
              .abs_less_than_pow2(-60));
}

TEST_CASE("half-success fraction") {
    const HighPrecisionReal eta = bard_half_success_eta(64);
    CHECK(std::fabs(eta.to_double() - 0.6307306) < 1e-6);

    // feeding the root back in halves the full-eta success
    const BigRational etaRat(eta.to_double()); // dyadic, exact
    const HighPrecisionReal lhs =
        bard_success(etaRat, 128) * HighPrecisionReal::from_long(2, 128);
    const HighPrecisionReal rhs = bard_success(BigRational(1), 128);
    CHECK((lhs - rhs).abs().to_double() < 1e-14);
}

TEST_CASE("expected fixed points in a fraction are exact rationals") {
    CHECK(expected_fixpoints_in_fraction(1000000, make_rational(1, 64)) ==
          make_rational(49, 64));
    CHECK(expected_fixpoints_in_fraction(1081080, make_rational(1, 64)) == BigRational(4));
    CHECK(expected_fixpoints_in_fraction(1, make_rational(1, 3)) == make_rational(1, 3));
    CHECK(expected_fixpoints_in_fraction(1081079, make_rational(1, 64)) ==
          make_rational(2, 64));
}

TEST_CASE("distinguisher accuracies for the three scaled ciphers") {
    const double vsRandom = kMissTable.randomPermutation;
    CHECK(std::fabs(distinguisher_accuracy(1.0 - kMissTable.alice, vsRandom) * 100.0 -
                    59.3879) < 1e-4);
    CHECK(std::fabs(distinguisher_accuracy(1.0 - kMissTable.bob, vsRandom) * 100.0 -
                    50.0316) < 1e-4);
    CHECK(std::fabs(distinguisher_accuracy(1.0 - kMissTable.charlie, vsRandom) * 100.0 -
                    78.3353) < 1e-4);

    CHECK(distinguisher_accuracy(0.5, 0.5) == 0.5);
    CHECK_THROWS_AS(distinguisher_accuracy(-0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(distinguisher_accuracy(0.5, 1.5), std::domain_error);
}

TEST_CASE("cost at the optimum run count") {
    const KeyRecoveryCost c = key_recovery_cost(23);
    CHECK(c.runs == 23);
    CHECK(!c.noFiltering);
    CHECK(std::fabs(c.stage1Log2 - 398.06579151415639) < 1e-8);
    CHECK(std::fabs(c.stage2Log2 - 396.18363056963835) < 1e-8);
    CHECK(std::fabs(c.totalLog2 - 398.41207001784312) < 1e-8);
    CHECK(std::fabs(c.candidateListLog2 - 116.5546235440444) < 1e-8);
    CHECK(std::fabs(c.successLog2 - (-17.980010756043086)) < 1e-8);
    CHECK(std::fabs(c.speedupLog2 - 119.23692625170781) < 1e-8);
    CHECK(c.successProbability == doctest::Approx(std::exp2(c.successLog2)).epsilon(1e-12));
}

TEST_CASE("zero runs means no filtering at all") {
    const KeyRecoveryCost c = key_recovery_cost(0);
    CHECK(c.noFiltering);
    CHECK(c.successProbability == 1.0);
    CHECK(c.successLog2 == 0.0);
    CHECK(std::fabs(c.candidateListLog2 - 256.0) < 1e-9);
    CHECK(std::isinf(c.stage1Log2));
    CHECK(c.stage1Log2 < 0);
    CHECK(std::fabs(c.totalLog2 - c.stage2Log2) < 1e-12);
    CHECK(std::fabs(c.speedupLog2) < 1e-9);
}

TEST_CASE("stage bookkeeping is internally consistent") {
    const double log2Success = std::log2(1.0 - 0.418335);
    double prevStage1 = -1e300;
    double prevStage2 = 1e300;
    for (unsigned n = 1; n <= 30; ++n) {
        const KeyRecoveryCost c = key_recovery_cost(n);
        const double hi = std::max(c.stage1Log2, c.stage2Log2);
        const double lse = hi + std::log2(1.0 + std::exp2(std::min(c.stage1Log2, c.stage2Log2) - hi));
        CHECK(std::fabs(c.totalLog2 - lse) < 1e-9);
        CHECK(std::fabs(c.successLog2 - n * log2Success) < 1e-9);
        // the geometric sum saturates in double precision around n = 9
        CHECK(c.stage1Log2 >= prevStage1);
        CHECK(c.stage2Log2 < prevStage2); // more runs, fewer survivors
        prevStage1 = c.stage1Log2;
        prevStage2 = c.stage2Log2;
    }
}

TEST_CASE("the optimizer lands on 23 runs") {
    const KeyRecoveryCost best = key_recovery_optimize(200);
    CHECK(best.runs == 23);
    CHECK(std::fabs(best.speedupLog2 - 119.23692625170781) < 1e-8);
    CHECK(key_recovery_cost(22).speedupLog2 < best.speedupLog2);
    CHECK(key_recovery_cost(24).speedupLog2 < best.speedupLog2);
}
