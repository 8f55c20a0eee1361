#pragma once

/*
 * Exact integer and rational arithmetic, backed by GMP.  mpq_class keeps
 * values in lowest terms with a positive denominator, which is exactly the
 * canonical form the rest of the library assumes.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace permcycle {

using BigInt = mpz_class;
using BigRational = mpq_class;

// n/d in canonical form.  mpq_class(n, d) alone does not canonicalize.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt int_pow(const BigInt& base, unsigned long e);
BigRational rational_pow(const BigRational& base, unsigned long e);

// "num/den" (or just "num" when den == 1).
std::string to_string(const BigRational& q);

} // namespace permcycle
