#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "permcycle/divisors.hpp"
#include "permcycle/rational.hpp"
#include "permcycle/real.hpp"

using namespace permcycle;

TEST_CASE("rational construction canonicalizes") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(to_string(BigRational(7)) == "7");
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("factorial, binomial, integer powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(52, 5) == 2598960);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(6, 7) == 0);
    CHECK(int_pow(2, 64) == BigInt("18446744073709551616"));
    CHECK(rational_pow(make_rational(2, 3), 3) == make_rational(8, 27));
}

TEST_CASE("divisor profiles of the headline exponents") {
    const DivisorProfile a = divisor_profile(1000000);
    CHECK(a.tau == 49);
    CHECK(a.sigma == 2480437);

    const DivisorProfile b = divisor_profile(1081079);
    CHECK(b.tau == 2); // prime
    CHECK(b.sigma == 1081080);

    const DivisorProfile c = divisor_profile(1081080);
    CHECK(c.tau == 256);
    CHECK(c.sigma == 4838400);
    CHECK(c.divisors.front() == 1);
    CHECK(c.divisors.back() == 1081080);
    CHECK(c.divisors.size() == 256);
    CHECK(std::is_sorted(c.divisors.begin(), c.divisors.end()));

    CHECK(divisor_profile(25).tau == 3);
    CHECK(divisor_profile(1).tau == 1);
    CHECK(divisor_profile(8).sigma_over_k() == make_rational(15, 8));
}

TEST_CASE("tau and sigma are multiplicative on coprime pairs") {
    const std::pair<std::uint64_t, std::uint64_t> pairs[] = {
        {8, 27}, {4, 25}, {9, 49}, {16, 81}, {5, 77}, {1000, 1001}};
    for (const auto& [m, n] : pairs) {
        const DivisorProfile pm = divisor_profile(m);
        const DivisorProfile pn = divisor_profile(n);
        const DivisorProfile pmn = divisor_profile(m * n);
        CHECK(pmn.tau == pm.tau * pn.tau);
        CHECK(pmn.sigma == pm.sigma * pn.sigma);
    }
}

TEST_CASE("every divisor divides and nothing else does") {
    const std::uint64_t k = 360;
    const DivisorProfile p = divisor_profile(k);
    std::uint64_t found = 0;
    for (std::uint64_t d = 1; d <= k; ++d)
        if (k % d == 0) {
            ++found;
            CHECK(std::binary_search(p.divisors.begin(), p.divisors.end(), d));
        }
    CHECK(found == p.tau);
}

TEST_CASE("constants match their leading decimal digits") {
    // digit strings chosen so the digit after the cut is below 5 (no
    // rounding at the boundary)
    CHECK(const_e(256).to_string(40) == "2.7182818284590452353602874713526624977572");
    CHECK(const_zeta2(256).to_string(40) == "1.6449340668482264364724151666460251892189");
    CHECK(const_zeta3(256).to_string(38) == "1.20205690315959428539973816151144999076");
}

TEST_CASE("constants are stable under doubled precision") {
    CHECK(const_e(512).to_string(40) == const_e(256).to_string(40));
    CHECK(const_zeta2(512).to_string(40) == const_zeta2(256).to_string(40));
    CHECK(const_zeta3(512).to_string(40) == const_zeta3(256).to_string(40));
    CHECK((const_e(512) - const_e(256)).abs_less_than_pow2(-250));
}

TEST_CASE("zeta values bracket their partial sums") {
    // sum_{n>N} 1/n^2 lies strictly between 1/(N+1) and 1/N
    const int N = 10000;
    HighPrecisionReal partial2 = HighPrecisionReal::from_long(0, 256);
    HighPrecisionReal partial3 = HighPrecisionReal::from_long(0, 256);
    for (long n = 1; n <= N; ++n) {
        partial2 = partial2 + HighPrecisionReal::from_rational(make_rational(1, BigInt(n) * n), 256);
        partial3 = partial3 +
                   HighPrecisionReal::from_rational(make_rational(1, BigInt(n) * n * n), 256);
    }
    const HighPrecisionReal tail2 = const_zeta2(256) - partial2;
    CHECK(tail2 > HighPrecisionReal::from_rational(make_rational(1, N + 1), 256));
    CHECK(tail2 < HighPrecisionReal::from_rational(make_rational(1, N), 256));

    // sum_{n>N} 1/n^3 lies strictly between 1/(2(N+1)^2) and 1/(2N^2)
    const HighPrecisionReal tail3 = const_zeta3(256) - partial3;
    CHECK(tail3 > HighPrecisionReal::from_rational(make_rational(1, 2 * BigInt(N + 1) * (N + 1)), 256));
    CHECK(tail3 < HighPrecisionReal::from_rational(make_rational(1, 2 * BigInt(N) * N), 256));
}

TEST_CASE("exp agrees with the e series") {
    CHECK((exp_hp(BigRational(1), 256) - const_e(256)).abs_less_than_pow2(-250));
    const HighPrecisionReal one = HighPrecisionReal::from_long(1, 256);
    CHECK((exp_hp(BigRational(0), 256) - one).abs_less_than_pow2(-250));
    // e^x * e^-x = 1
    const HighPrecisionReal prod =
        exp_hp(make_rational(3, 7), 256) * exp_hp(make_rational(-3, 7), 256);
    CHECK((prod - one).abs_less_than_pow2(-250));
}

TEST_CASE("real arithmetic round trips") {
    const int bits = 128;
    const HighPrecisionReal a = HighPrecisionReal::from_rational(make_rational(355, 113), bits);
    const HighPrecisionReal b = HighPrecisionReal::from_rational(make_rational(-22, 7), bits);
    CHECK(((a + b) - b - a).abs_less_than_pow2(-120));
    const HighPrecisionReal one = HighPrecisionReal::from_long(1, bits);
    CHECK((a * (one / a) - one).abs_less_than_pow2(-120));
    CHECK((a.log().exp() - a).abs_less_than_pow2(-118));
    CHECK(a.pow_ui(3).to_double() == doctest::Approx(std::pow(355.0 / 113.0, 3.0)));

    const HighPrecisionReal big = HighPrecisionReal::from_long(1024, bits);
    CHECK(big.log2().to_double() == doctest::Approx(10.0));
    CHECK(log2_hp(big).to_double() == doctest::Approx(10.0));
    CHECK(pow_hp(HighPrecisionReal::from_long(2, bits), big.log2()).to_double() ==
          doctest::Approx(1024.0));
}

TEST_CASE("ordering and magnitude predicates") {
    const int bits = 128;
    const HighPrecisionReal small =
        HighPrecisionReal::from_rational(make_rational(1, int_pow(2, 100)), bits);
    CHECK(small.abs_less_than_pow2(-99));
    CHECK(!small.abs_less_than_pow2(-100)); // equality is not "less than"
    CHECK(small > HighPrecisionReal::from_long(0, bits));
    CHECK((-small) < HighPrecisionReal::from_long(0, bits));
    CHECK((-small).abs() > HighPrecisionReal::from_long(0, bits));
    CHECK(HighPrecisionReal::from_double(0.5, bits).compare(
              HighPrecisionReal::from_rational(make_rational(1, 2), bits)) == 0);
}

TEST_CASE("decimal printing rounds to nearest") {
    const int bits = 256;
    CHECK(HighPrecisionReal::from_rational(make_rational(1, 3), bits).to_string(6) ==
          "0.333333");
    CHECK(HighPrecisionReal::from_rational(make_rational(2, 3), bits).to_string(6) ==
          "0.666667");
    CHECK(HighPrecisionReal::from_long(-7, bits).to_string(2) == "-7.00");
}
