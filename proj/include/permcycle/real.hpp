#pragma once

/*
 * Arbitrary-precision reals on top of MPFR.  A HighPrecisionReal remembers
 * the precision it was requested at; internally every value carries
 * kGuardBits extra mantissa bits so that short chains of correctly rounded
 * operations (each <= 0.5 ulp at working precision) stay accurate to the
 * requested 2^-precisionBits when compared or printed.
 *
 * The mathematical constants are computed from series with explicit tail
 * bounds rather than taken from library tables:
 *   e      = sum 1/i!                         tail < 2/(m+1)!
 *   zeta2  = 3 * sum 1/(n^2 C(2n,n))          term ratio < 1/4, tail < (4/3) t_{m+1}
 *   zeta3  = 5/2 * sum (-1)^(n-1)/(n^3 C(2n,n))   alternating, tail < t_{m+1}
 * Each partial sum is accumulated exactly in rationals and rounded once.
 */

#include <string>
#include <mpfr.h>

#include "permcycle/rational.hpp"

namespace permcycle {

class HighPrecisionReal {
public:
    static constexpr int kGuardBits = 32;

    explicit HighPrecisionReal(int precisionBits = 64);
    HighPrecisionReal(const HighPrecisionReal& o);
    HighPrecisionReal(HighPrecisionReal&& o) noexcept;
    HighPrecisionReal& operator=(HighPrecisionReal o);
    ~HighPrecisionReal();

    static HighPrecisionReal from_rational(const BigRational& q, int precisionBits);
    static HighPrecisionReal from_long(long v, int precisionBits);
    static HighPrecisionReal from_double(double v, int precisionBits);

    int precision_bits() const { return precision_bits_; }

    HighPrecisionReal operator+(const HighPrecisionReal& rhs) const;
    HighPrecisionReal operator-(const HighPrecisionReal& rhs) const;
    HighPrecisionReal operator*(const HighPrecisionReal& rhs) const;
    HighPrecisionReal operator/(const HighPrecisionReal& rhs) const;
    HighPrecisionReal operator-() const;

    HighPrecisionReal exp() const;
    HighPrecisionReal log() const;
    HighPrecisionReal log2() const;
    HighPrecisionReal abs() const;
    // this^e, e need not be an integer; requires *this > 0 unless e is integral
    HighPrecisionReal pow(const HighPrecisionReal& e) const;
    HighPrecisionReal pow_ui(unsigned long e) const;

    int compare(const HighPrecisionReal& rhs) const;
    bool operator<(const HighPrecisionReal& rhs) const { return compare(rhs) < 0; }
    bool operator>(const HighPrecisionReal& rhs) const { return compare(rhs) > 0; }
    bool operator<=(const HighPrecisionReal& rhs) const { return compare(rhs) <= 0; }
    bool operator>=(const HighPrecisionReal& rhs) const { return compare(rhs) >= 0; }

    // |*this| < 2^e
    bool abs_less_than_pow2(long e) const;

    double to_double() const;
    // fixed-point decimal, round to nearest
    std::string to_string(int decimalDigits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
    int precision_bits_;
    int working_bits() const { return precision_bits_ + kGuardBits; }
};

HighPrecisionReal const_e(int precisionBits);
HighPrecisionReal const_zeta2(int precisionBits);
HighPrecisionReal const_zeta3(int precisionBits);

HighPrecisionReal exp_hp(const BigRational& x, int precisionBits);
HighPrecisionReal pow_hp(const HighPrecisionReal& base, const HighPrecisionReal& e);
HighPrecisionReal log2_hp(const HighPrecisionReal& x);

} // namespace permcycle
