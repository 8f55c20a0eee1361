#include "permcycle/fixpoints.hpp"

#include <stdexcept>

#include "permcycle/bivariate.hpp"

namespace permcycle {

std::uint64_t fixed_points_from_cycle(std::uint64_t len, std::uint64_t k) {
    if (len == 0) throw std::domain_error("cycle lengths start at 1");
    return k % len == 0 ? len : 0;
}

namespace {

/*
 * The series route to the expected count: with
 *   a(y,z) = exp(sum_{i|k} (y^i - z^i)/i) / (1-z)
 * the y-derivative on the diagonal collapses to
 *   (1-z) a_y(z,z) = sum_{i|k} z^{i-1}
 * exactly, because the exponential factor is 1 at y = z.  Verifying that
 * coefficient identity term by term (and reading off its value at z = 1)
 * reproduces tau(k) without ever touching divisor counting.
 */
std::uint64_t expected_fixed_points_via_series(const DivisorProfile& prof) {
    const std::size_t order = static_cast<std::size_t>(prof.k) + 2;

    BivariateSeries m(order);
    for (std::uint64_t i : prof.divisors) {
        BigRational inv = make_rational(1, static_cast<long>(i));
        m.add_term(static_cast<std::size_t>(i), 0, inv);
        m.add_term(0, static_cast<std::size_t>(i), -inv);
    }
    BivariateSeries geo(order);
    for (std::size_t j = 0; j <= order; ++j) geo.add_term(0, j, BigRational(1));

    BivariateSeries a = bv_mul(bv_exp(m), geo);
    TruncatedSeries diag = bv_diagonal(bv_partial_y(a)); // valid through order-1

    // (1-z) * diag, valid through order-1
    const std::size_t checkOrder = order - 1;
    std::uint64_t tau = 0;
    for (std::size_t n = 0; n <= checkOrder; ++n) {
        BigRational c = diag.coeff(n);
        if (n > 0) c -= diag.coeff(n - 1);
        bool shouldBeOne = n + 1 <= prof.k && prof.k % (n + 1) == 0;
        if (c != BigRational(shouldBeOne ? 1 : 0))
            throw std::logic_error("series pipeline disagrees with divisor indicator");
        if (c == 1) ++tau;
    }
    return tau;
}

} // namespace

std::uint64_t expected_fixed_points(std::uint64_t k) {
    if (k == 0) throw std::domain_error("expected_fixed_points requires k >= 1");
    DivisorProfile prof = divisor_profile(k);
    // the series cross-check costs O(k^2) coefficients; run it where cheap
    if (k <= 24 && expected_fixed_points_via_series(prof) != prof.tau)
        throw std::logic_error("series pipeline disagrees with divisor count");
    return prof.tau;
}

FixpointDistribution fixpoint_distribution(std::uint64_t k, std::uint64_t cMax,
                                           int precisionBits) {
    if (k == 0) throw std::domain_error("fixpoint_distribution requires k >= 1");
    DivisorProfile prof = divisor_profile(k);

    // exp(sum_{i|k, i<=cMax} y^i/i): divisors above cMax only feed
    // coefficients above cMax, so the truncation is lossless here
    TruncatedSeries u(static_cast<std::size_t>(cMax));
    for (std::uint64_t i : prof.divisors) {
        if (i > cMax) break;
        u.set_coeff(static_cast<std::size_t>(i), make_rational(1, static_cast<long>(i)));
    }
    TruncatedSeries series = ts_exp(u);

    HighPrecisionReal scale = exp_hp(-prof.sigma_over_k(), precisionBits);

    FixpointDistribution dist;
    dist.k = k;
    dist.cMax = cMax;
    dist.precisionBits = precisionBits;
    dist.probabilities.reserve(cMax + 1);
    HighPrecisionReal sum(precisionBits);
    for (std::uint64_t c = 0; c <= cMax; ++c) {
        HighPrecisionReal p =
            HighPrecisionReal::from_rational(series.coeff(static_cast<std::size_t>(c)),
                                             precisionBits) *
            scale;
        sum = sum + p;
        dist.probabilities.push_back(std::move(p));
    }
    dist.tailBound = HighPrecisionReal::from_long(1, precisionBits) - sum;
    return dist;
}

HighPrecisionReal pgf_eval(std::uint64_t k, const HighPrecisionReal& x) {
    const int bits = x.precision_bits();
    if (x < HighPrecisionReal(bits) || x > HighPrecisionReal::from_long(1, bits))
        throw std::domain_error("pgf_eval requires x in [0, 1]");
    DivisorProfile prof = divisor_profile(k);
    HighPrecisionReal expo(bits);
    HighPrecisionReal one = HighPrecisionReal::from_long(1, bits);
    for (std::uint64_t i : prof.divisors) {
        HighPrecisionReal term =
            (x.pow_ui(static_cast<unsigned long>(i)) - one) /
            HighPrecisionReal::from_long(static_cast<long>(i), bits);
        expo = expo + term;
    }
    return expo.exp();
}

namespace {

// m = c1 + 8 c2
BigRational pairs_of(std::uint64_t c1, std::uint64_t c2) {
    BigInt m(static_cast<unsigned long>(c1 + 8 * c2));
    return make_rational(m * (m - 1), BigInt(2));
}

/*
 * Grid summation of E[f(c1,c2); c1 >= threshold] against the joint law
 * (1/(c1! c2!)) (7/8)^c2 e^{-15/8}.  The e^{-15/8} factor stays outside so
 * the grid sum is exact.  Cut off at kGrid = 64: the dropped mass times the
 * largest polynomial value in reach is far below 2^-200 (factorial decay;
 * f grows only quadratically).
 */
constexpr std::uint64_t kGrid = 64;

template <typename F>
HighPrecisionReal grid_expectation(std::uint64_t c1Threshold, int precisionBits, F&& f) {
    BigRational total(0);
    for (std::uint64_t c1 = c1Threshold; c1 <= kGrid; ++c1) {
        BigRational rowWeight = make_rational(BigInt(1), factorial(c1));
        BigRational row(0);
        for (std::uint64_t c2 = 0; c2 <= kGrid; ++c2) {
            BigRational w = make_rational(BigInt(1), factorial(c2)) *
                            rational_pow(make_rational(7, 8), c2);
            row += w * f(c1, c2);
        }
        total += rowWeight * row;
    }
    return HighPrecisionReal::from_rational(total, precisionBits) *
           exp_hp(make_rational(-15, 8), precisionBits);
}

} // namespace

HighPrecisionReal restricted_pair_expectation(std::uint64_t c1Threshold, int precisionBits) {
    return grid_expectation(c1Threshold, precisionBits, pairs_of);
}

WorkloadReport restricted_workload_expectation(int precisionBits) {
    WorkloadReport rep;
    HighPrecisionReal e = const_e(precisionBits);
    HighPrecisionReal one = HighPrecisionReal::from_long(1, precisionBits);
    rep.reference = HighPrecisionReal::from_rational(make_rational(113, 2), precisionBits) -
                    HighPrecisionReal::from_long(46, precisionBits) / e;

    HighPrecisionReal pAtLeastOne = one - one / e; // P[c1 >= 1]
    auto workload = [](std::uint64_t c1, std::uint64_t c2) {
        return BigRational(static_cast<unsigned long>(c1 + 8 * c2));
    };

    HighPrecisionReal truncated = grid_expectation(1, precisionBits, workload);
    HighPrecisionReal truncatedPairs = restricted_pair_expectation(1, precisionBits);

    rep.candidates.push_back({"E[m * 1{c1>=1}]", truncated, false});
    rep.candidates.push_back({"E[m | c1>=1]", truncated / pAtLeastOne, false});
    rep.candidates.push_back({"E[C(m,2) * 1{c1>=1}]", truncatedPairs, false});
    rep.candidates.push_back({"E[C(m,2) | c1>=1]", truncatedPairs / pAtLeastOne, false});

    HighPrecisionReal tol = HighPrecisionReal::from_double(1e-6, precisionBits);
    for (auto& c : rep.candidates) {
        c.matchesReference = (c.value - rep.reference).abs() < tol;
        rep.anyMatch = rep.anyMatch || c.matchesReference;
    }
    return rep;
}

} // namespace permcycle
