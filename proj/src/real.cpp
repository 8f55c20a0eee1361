#include "permcycle/real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <vector>

namespace permcycle {

HighPrecisionReal::HighPrecisionReal(int precisionBits) : precision_bits_(precisionBits) {
    if (precisionBits < 2) throw std::domain_error("precisionBits must be >= 2");
    mpfr_init2(v_, working_bits());
    mpfr_set_zero(v_, 1);
}

HighPrecisionReal::HighPrecisionReal(const HighPrecisionReal& o)
    : precision_bits_(o.precision_bits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HighPrecisionReal::HighPrecisionReal(HighPrecisionReal&& o) noexcept
    : precision_bits_(o.precision_bits_) {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
}

HighPrecisionReal& HighPrecisionReal::operator=(HighPrecisionReal o) {
    mpfr_swap(v_, o.v_);
    std::swap(precision_bits_, o.precision_bits_);
    return *this;
}

HighPrecisionReal::~HighPrecisionReal() { mpfr_clear(v_); }

HighPrecisionReal HighPrecisionReal::from_rational(const BigRational& q, int precisionBits) {
    HighPrecisionReal r(precisionBits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::from_long(long v, int precisionBits) {
    HighPrecisionReal r(precisionBits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::from_double(double v, int precisionBits) {
    HighPrecisionReal r(precisionBits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

namespace {
// results work at the larger of the two operand precisions
int join_bits(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    return a.precision_bits() > b.precision_bits() ? a.precision_bits() : b.precision_bits();
}
} // namespace

HighPrecisionReal HighPrecisionReal::operator+(const HighPrecisionReal& rhs) const {
    HighPrecisionReal r(join_bits(*this, rhs));
    mpfr_add(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::operator-(const HighPrecisionReal& rhs) const {
    HighPrecisionReal r(join_bits(*this, rhs));
    mpfr_sub(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::operator*(const HighPrecisionReal& rhs) const {
    HighPrecisionReal r(join_bits(*this, rhs));
    mpfr_mul(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::operator/(const HighPrecisionReal& rhs) const {
    if (mpfr_zero_p(rhs.v_)) throw std::domain_error("division by zero");
    HighPrecisionReal r(join_bits(*this, rhs));
    mpfr_div(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::operator-() const {
    HighPrecisionReal r(precision_bits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::exp() const {
    HighPrecisionReal r(precision_bits_);
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::log() const {
    if (mpfr_sgn(v_) <= 0) throw std::domain_error("log of non-positive value");
    HighPrecisionReal r(precision_bits_);
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::log2() const {
    if (mpfr_sgn(v_) <= 0) throw std::domain_error("log2 of non-positive value");
    HighPrecisionReal r(precision_bits_);
    mpfr_log2(r.v_, v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::abs() const {
    HighPrecisionReal r(precision_bits_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

HighPrecisionReal HighPrecisionReal::pow(const HighPrecisionReal& e) const {
    HighPrecisionReal r(join_bits(*this, e));
    mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
    if (mpfr_nan_p(r.v_)) throw std::domain_error("pow produced NaN");
    return r;
}

HighPrecisionReal HighPrecisionReal::pow_ui(unsigned long e) const {
    HighPrecisionReal r(precision_bits_);
    mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
    return r;
}

int HighPrecisionReal::compare(const HighPrecisionReal& rhs) const {
    return mpfr_cmp(v_, rhs.v_);
}

bool HighPrecisionReal::abs_less_than_pow2(long e) const {
    if (mpfr_zero_p(v_)) return true;
    // |v| < 2^e  <=>  exponent of v <= e (mpfr exponent convention:
    // 2^(exp-1) <= |v| < 2^exp)
    return mpfr_get_exp(v_) <= e;
}

double HighPrecisionReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string HighPrecisionReal::to_string(int decimalDigits) const {
    if (decimalDigits < 0) throw std::domain_error("negative digit count");
    std::vector<char> buf(static_cast<std::size_t>(decimalDigits) + mpfr_get_prec(v_) / 3 + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimalDigits, v_);
    return std::string(buf.data());
}

/*
 * e = sum_{i=0..m} 1/i!, exact rational, with m the first index where
 * the tail sum_{i>m} 1/i! < 2/(m+1)! drops below 2^-(working+2).
 */
HighPrecisionReal const_e(int precisionBits) {
    const long target = precisionBits + HighPrecisionReal::kGuardBits + 2;
    BigRational sum(1);
    BigInt fact(1);
    for (unsigned long i = 1;; ++i) {
        fact *= i;
        sum += make_rational(BigInt(1), fact);
        // 2/(i+1)! < 2^-target  <=>  (i+1)! > 2^(target+1)
        if (mpz_sizeinbase(BigInt(fact * (i + 1)).get_mpz_t(), 2) > static_cast<std::size_t>(target + 2))
            break;
    }
    return HighPrecisionReal::from_rational(sum, precisionBits);
}

/*
 * zeta(2) = 3 sum_{n>=1} 1/(n^2 C(2n,n)).  Consecutive term ratio is
 * n^2 / (2 (n+1)(2n+1)) < 1/4, so the tail after m terms is below
 * (4/3) * t_{m+1} and each term is below 4^-n.
 */
HighPrecisionReal const_zeta2(int precisionBits) {
    const long target = precisionBits + HighPrecisionReal::kGuardBits + 2;
    const unsigned long terms = static_cast<unsigned long>(target) / 2 + 8;
    BigRational sum(0);
    for (unsigned long n = 1; n <= terms; ++n)
        sum += make_rational(BigInt(1), BigInt(n) * n * binomial(2 * n, n));
    return HighPrecisionReal::from_rational(3 * sum, precisionBits);
}

/*
 * zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1)/(n^3 C(2n,n)); alternating with
 * terms below 4^-n, so the tail is bounded by the first omitted term.
 */
HighPrecisionReal const_zeta3(int precisionBits) {
    const long target = precisionBits + HighPrecisionReal::kGuardBits + 2;
    const unsigned long terms = static_cast<unsigned long>(target) / 2 + 8;
    BigRational sum(0);
    for (unsigned long n = 1; n <= terms; ++n) {
        BigRational t = make_rational(BigInt(1), BigInt(n) * n * n * binomial(2 * n, n));
        if (n % 2 == 0) t = -t;
        sum += t;
    }
    return HighPrecisionReal::from_rational(make_rational(5, 2) * sum, precisionBits);
}

HighPrecisionReal exp_hp(const BigRational& x, int precisionBits) {
    return HighPrecisionReal::from_rational(x, precisionBits).exp();
}

HighPrecisionReal pow_hp(const HighPrecisionReal& base, const HighPrecisionReal& e) {
    return base.pow(e);
}

HighPrecisionReal log2_hp(const HighPrecisionReal& x) { return x.log2(); }

} // namespace permcycle
