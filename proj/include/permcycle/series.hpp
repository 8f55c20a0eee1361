#pragma once

/*
 * Truncated power series with exact rational coefficients.  A series of
 * truncation order N stores coefficients of z^0 .. z^N; arithmetic results
 * carry the minimum truncation order of their operands, so a coefficient is
 * never reported unless every term feeding it was present.
 */

#include <cstddef>
#include <vector>

#include "permcycle/rational.hpp"
#include "permcycle/real.hpp"

namespace permcycle {

class TruncatedSeries {
public:
    TruncatedSeries() : coeff_(1) {}
    explicit TruncatedSeries(std::size_t order) : coeff_(order + 1) {}
    explicit TruncatedSeries(std::vector<BigRational> coeffs);

    std::size_t order() const { return coeff_.size() - 1; }
    const BigRational& coeff(std::size_t n) const;
    void set_coeff(std::size_t n, const BigRational& v);
    const std::vector<BigRational>& coeffs() const { return coeff_; }

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries one(std::size_t order);
    // z^c / c!
    static TruncatedSeries monomial_over_factorial(std::size_t c, std::size_t order);
    // 1/(1-z) = 1 + z + z^2 + ...
    static TruncatedSeries geometric(std::size_t order);

    bool operator==(const TruncatedSeries& rhs) const { return coeff_ == rhs.coeff_; }

private:
    std::vector<BigRational> coeff_; // coeff_[n] multiplies z^n
};

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_scale(const TruncatedSeries& a, const BigRational& c);
// d/dz, order drops by one
TruncatedSeries ts_derivative(const TruncatedSeries& a);

// exp(a) for a with zero constant term, via the derivative recurrence
//   b_0 = 1,  b_n = (1/n) sum_{j=1..n} j a_j b_{n-j}
TruncatedSeries ts_exp(const TruncatedSeries& a);

// log 1/(1-z) = sum_{i>=1} z^i/i
TruncatedSeries ts_log_inv_one_minus_z(std::size_t order);

// outer(inner) for inner with zero constant term (Horner over series)
TruncatedSeries ts_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// a^e with truncation
TruncatedSeries ts_pow(const TruncatedSeries& a, unsigned long e);

// sum a_n x^n by Horner in precisionBits-bit arithmetic
HighPrecisionReal ts_eval_hp(const TruncatedSeries& a, const HighPrecisionReal& x);

} // namespace permcycle
