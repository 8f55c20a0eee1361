#pragma once

/*
 * Bivariate truncated series in y and z, exact rational coefficients, kept
 * sparse and truncated by total degree.  Just enough calculus (exp, d/dy,
 * diagonal y:=z) for the expected-value pipeline built on top of it.
 */

#include <cstddef>
#include <map>
#include <utility>

#include "permcycle/rational.hpp"
#include "permcycle/series.hpp"

namespace permcycle {

class BivariateSeries {
public:
    explicit BivariateSeries(std::size_t totalOrder) : order_(totalOrder) {}

    std::size_t total_order() const { return order_; }
    BigRational coeff(std::size_t yPow, std::size_t zPow) const;
    // silently drops terms beyond the total-degree cap
    void add_term(std::size_t yPow, std::size_t zPow, const BigRational& v);

    const std::map<std::pair<std::size_t, std::size_t>, BigRational>& terms() const {
        return terms_;
    }

private:
    std::size_t order_;
    std::map<std::pair<std::size_t, std::size_t>, BigRational> terms_;
};

BivariateSeries bv_add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries bv_mul(const BivariateSeries& a, const BivariateSeries& b);

// exp(a) = sum a^j/j! for a with zero constant term; a^j has total degree
// >= j, so j ranges over 0..totalOrder only
BivariateSeries bv_exp(const BivariateSeries& a);

// d/dy, total order drops by one
BivariateSeries bv_partial_y(const BivariateSeries& a);

// substitute y := z: coefficient of z^n is the sum over yPow+zPow == n
TruncatedSeries bv_diagonal(const BivariateSeries& a);

} // namespace permcycle
