#include "permcycle/classes.hpp"

#include <stdexcept>

namespace permcycle {

CycleLengthSet CycleLengthSet::finite(std::set<std::uint64_t> s) {
    for (std::uint64_t v : s)
        if (v == 0) throw std::domain_error("cycle lengths start at 1");
    CycleLengthSet r;
    r.kind = Kind::Finite;
    r.lengths = std::move(s);
    return r;
}

CycleLengthSet CycleLengthSet::all_except(std::set<std::uint64_t> s) {
    for (std::uint64_t v : s)
        if (v == 0) throw std::domain_error("cycle lengths start at 1");
    CycleLengthSet r;
    r.kind = Kind::AllExcept;
    r.lengths = std::move(s);
    return r;
}

CycleLengthSet CycleLengthSet::all() { return CycleLengthSet{}; }

CycleLengthSet CycleLengthSet::divisors_of(std::uint64_t k) {
    if (k == 0) throw std::domain_error("divisors_of requires k >= 1");
    CycleLengthSet r;
    r.kind = Kind::DivisorsOf;
    r.k = k;
    return r;
}

CycleLengthSet CycleLengthSet::perfect_powers(unsigned e) {
    if (e < 2) throw std::domain_error("perfect_powers requires exponent >= 2");
    CycleLengthSet r;
    r.kind = Kind::PerfectPowers;
    r.exponent = e;
    return r;
}

bool CycleLengthSet::contains(std::uint64_t len) const {
    if (len == 0) return false;
    switch (kind) {
        case Kind::Finite: return lengths.count(len) != 0;
        case Kind::AllExcept: return lengths.count(len) == 0;
        case Kind::All: return true;
        case Kind::DivisorsOf: return k % len == 0;
        case Kind::PerfectPowers: {
            // len = m^e for some m?
            for (std::uint64_t m = 1;; ++m) {
                std::uint64_t p = 1;
                bool overflow = false;
                for (unsigned i = 0; i < exponent; ++i) {
                    if (p > len / m) { overflow = true; break; }
                    p *= m;
                }
                if (overflow || p > len) return false;
                if (p == len) return true;
            }
        }
    }
    return false;
}

CycleCountSet CycleCountSet::finite(std::set<std::uint64_t> s) {
    CycleCountSet r;
    r.kind = Kind::Finite;
    r.counts = std::move(s);
    return r;
}

CycleCountSet CycleCountSet::exactly(std::uint64_t t) { return finite({t}); }

CycleCountSet CycleCountSet::all() { return CycleCountSet{}; }

bool CycleCountSet::contains(std::uint64_t count) const {
    return kind == Kind::All || counts.count(count) != 0;
}

TruncatedSeries alpha_series(const CycleLengthSet& A, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 1; i <= order; ++i)
        if (A.contains(i)) s.set_coeff(i, make_rational(1, static_cast<long>(i)));
    return s;
}

TruncatedSeries class_egf_series(const CycleLengthSet& A, const CycleCountSet& B,
                                 std::size_t order) {
    TruncatedSeries alpha = alpha_series(A, order);
    if (B.kind == CycleCountSet::Kind::All) return ts_exp(alpha);
    // beta(y) = sum_{t in B} y^t/t!; terms beyond the truncation order cannot
    // contribute because alpha has no constant term
    TruncatedSeries beta(order);
    for (std::uint64_t t : B.counts)
        if (t <= order) beta.set_coeff(t, make_rational(BigInt(1), factorial(t)));
    return ts_compose(beta, alpha);
}

StructuredEGF class_egf_structured(const std::set<std::uint64_t>& prohibited,
                                   std::optional<std::uint64_t> prefactorFixpoints) {
    std::size_t pOrder = 0;
    for (std::uint64_t i : prohibited) {
        if (i == 0) throw std::domain_error("cycle lengths start at 1");
        pOrder = std::max<std::size_t>(pOrder, i);
    }
    StructuredEGF f;
    f.p = TruncatedSeries(pOrder);
    for (std::uint64_t i : prohibited)
        f.p.set_coeff(i, make_rational(-1, static_cast<long>(i)));
    std::size_t c = prefactorFixpoints.value_or(0);
    f.q = TruncatedSeries::monomial_over_factorial(c, c);
    f.poleOrder = 1;
    return f;
}

namespace {
BigRational eval_at_one(const TruncatedSeries& s) {
    BigRational v(0);
    for (std::size_t n = 0; n <= s.order(); ++n) v += s.coeff(n);
    return v;
}
} // namespace

HighPrecisionReal limit_probability(const StructuredEGF& f, int precisionBits) {
    if (f.poleOrder == 0)
        throw std::domain_error("pole order 0: (1-z) f(z) -> 0, the limit probability is 0");
    if (f.poleOrder > 1)
        throw std::domain_error("pole order > 1: (1-z) f(z) diverges as z -> 1");
    BigRational q1 = eval_at_one(f.q);
    BigRational p1 = eval_at_one(f.p);
    return HighPrecisionReal::from_rational(q1, precisionBits) * exp_hp(p1, precisionBits);
}

namespace {
TruncatedSeries pad(const TruncatedSeries& s, std::size_t order) {
    TruncatedSeries r(order);
    for (std::size_t n = 0; n <= std::min(order, s.order()); ++n) r.set_coeff(n, s.coeff(n));
    return r;
}
} // namespace

TruncatedSeries structured_expansion(const StructuredEGF& f, std::size_t order) {
    TruncatedSeries r = ts_mul(pad(f.q, order), ts_exp(pad(f.p, order)));
    for (unsigned m = 0; m < f.poleOrder; ++m) r = ts_mul(r, TruncatedSeries::geometric(order));
    return r;
}

ConvergenceReport convergence_report(const StructuredEGF& f, std::size_t order,
                                     int precisionBits) {
    ConvergenceReport rep{limit_probability(f, precisionBits), {}};
    TruncatedSeries coeffs = structured_expansion(f, order);
    rep.rows.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        ConvergenceRow row;
        row.n = n;
        row.coefficient = coeffs.coeff(n);
        row.distance =
            (HighPrecisionReal::from_rational(row.coefficient, precisionBits) - rep.limit).abs();
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

HighPrecisionReal prob_no_cycles_in(const std::set<std::uint64_t>& A, int precisionBits) {
    BigRational x(0);
    for (std::uint64_t i : A) {
        if (i == 0) throw std::domain_error("cycle lengths start at 1");
        x += make_rational(BigInt(1), BigInt(static_cast<unsigned long>(i)));
    }
    return exp_hp(-x, precisionBits);
}

HighPrecisionReal joint_prob_c1_c2(std::uint64_t c1, std::uint64_t c2, int precisionBits) {
    BigRational pre = make_rational(BigInt(1), factorial(c1) * factorial(c2)) *
                      rational_pow(make_rational(7, 8), c2);
    return HighPrecisionReal::from_rational(pre, precisionBits) *
           exp_hp(make_rational(-15, 8), precisionBits);
}

HighPrecisionReal prob_no_powerlength_cycles(unsigned e, int precisionBits) {
    if (e == 2) return (-const_zeta2(precisionBits)).exp();
    if (e == 3) return (-const_zeta3(precisionBits)).exp();
    throw std::domain_error("only exponents 2 and 3 are supported");
}

} // namespace permcycle
