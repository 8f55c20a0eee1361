#include "permcycle/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace permcycle {

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs) : coeff_(std::move(coeffs)) {
    if (coeff_.empty()) coeff_.resize(1);
}

const BigRational& TruncatedSeries::coeff(std::size_t n) const {
    if (n >= coeff_.size()) throw std::out_of_range("coefficient beyond truncation order");
    return coeff_[n];
}

void TruncatedSeries::set_coeff(std::size_t n, const BigRational& v) {
    if (n >= coeff_.size()) throw std::out_of_range("coefficient beyond truncation order");
    coeff_[n] = v;
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) { return TruncatedSeries(order); }

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeff_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial_over_factorial(std::size_t c, std::size_t order) {
    TruncatedSeries s(order);
    if (c <= order) s.coeff_[c] = make_rational(BigInt(1), factorial(c));
    return s;
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s.coeff_[n] = 1;
    return s;
}

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
    return r;
}

TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
    return r;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b.coeff(j) == 0) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

TruncatedSeries ts_scale(const TruncatedSeries& a, const BigRational& c) {
    TruncatedSeries r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r.set_coeff(n, a.coeff(n) * c);
    return r;
}

TruncatedSeries ts_derivative(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries(0);
    TruncatedSeries r(a.order() - 1);
    for (std::size_t n = 1; n <= a.order(); ++n)
        r.set_coeff(n - 1, a.coeff(n) * BigRational(static_cast<unsigned long>(n)));
    return r;
}

TruncatedSeries ts_exp(const TruncatedSeries& a) {
    if (a.coeff(0) != 0) throw std::domain_error("ts_exp requires zero constant term");
    const std::size_t order = a.order();
    // skip list of nonzero a_j keeps sparse exponents (divisor sums) cheap
    std::vector<std::size_t> support;
    for (std::size_t j = 1; j <= order; ++j)
        if (a.coeff(j) != 0) support.push_back(j);

    TruncatedSeries b(order);
    b.set_coeff(0, BigRational(1));
    for (std::size_t n = 1; n <= order; ++n) {
        BigRational acc(0);
        for (std::size_t j : support) {
            if (j > n) break;
            acc += BigRational(static_cast<unsigned long>(j)) * a.coeff(j) * b.coeff(n - j);
        }
        b.set_coeff(n, acc / BigRational(static_cast<unsigned long>(n)));
    }
    return b;
}

TruncatedSeries ts_log_inv_one_minus_z(std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t n = 1; n <= order; ++n)
        s.set_coeff(n, make_rational(1, static_cast<long>(n)));
    return s;
}

TruncatedSeries ts_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeff(0) != 0) throw std::domain_error("ts_compose requires inner constant term 0");
    const std::size_t order = std::min(outer.order(), inner.order());
    // Horner from the top coefficient down
    TruncatedSeries r(order);
    TruncatedSeries innerTrunc(order);
    for (std::size_t n = 0; n <= order; ++n) innerTrunc.set_coeff(n, inner.coeff(n));
    for (std::size_t i = order + 1; i-- > 0;) {
        r = ts_mul(r, innerTrunc);
        r.set_coeff(0, r.coeff(0) + outer.coeff(i));
    }
    return r;
}

TruncatedSeries ts_pow(const TruncatedSeries& a, unsigned long e) {
    TruncatedSeries r = TruncatedSeries::one(a.order());
    for (unsigned long i = 0; i < e; ++i) r = ts_mul(r, a);
    return r;
}

HighPrecisionReal ts_eval_hp(const TruncatedSeries& a, const HighPrecisionReal& x) {
    const int bits = x.precision_bits();
    HighPrecisionReal r(bits);
    for (std::size_t i = a.order() + 1; i-- > 0;)
        r = r * x + HighPrecisionReal::from_rational(a.coeff(i), bits);
    return r;
}

} // namespace permcycle
