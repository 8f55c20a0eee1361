#include "permcycle/bivariate.hpp"

#include <stdexcept>

namespace permcycle {

BigRational BivariateSeries::coeff(std::size_t yPow, std::size_t zPow) const {
    if (yPow + zPow > order_) throw std::out_of_range("term beyond total order");
    auto it = terms_.find({yPow, zPow});
    return it == terms_.end() ? BigRational(0) : it->second;
}

void BivariateSeries::add_term(std::size_t yPow, std::size_t zPow, const BigRational& v) {
    if (yPow + zPow > order_ || v == 0) return;
    auto [it, inserted] = terms_.try_emplace({yPow, zPow}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariateSeries bv_add(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.total_order(), b.total_order()));
    for (const auto& [pw, v] : a.terms()) r.add_term(pw.first, pw.second, v);
    for (const auto& [pw, v] : b.terms()) r.add_term(pw.first, pw.second, v);
    return r;
}

BivariateSeries bv_mul(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.total_order(), b.total_order()));
    for (const auto& [pa, va] : a.terms())
        for (const auto& [pb, vb] : b.terms())
            r.add_term(pa.first + pb.first, pa.second + pb.second, va * vb);
    return r;
}

BivariateSeries bv_exp(const BivariateSeries& a) {
    if (a.coeff(0, 0) != 0) throw std::domain_error("bv_exp requires zero constant term");
    BivariateSeries r(a.total_order());
    r.add_term(0, 0, BigRational(1));
    BivariateSeries power(a.total_order());
    power.add_term(0, 0, BigRational(1));
    BigRational invFact(1);
    for (std::size_t j = 1; j <= a.total_order(); ++j) {
        power = bv_mul(power, a);
        if (power.terms().empty()) break;
        invFact /= BigRational(static_cast<unsigned long>(j));
        for (const auto& [pw, v] : power.terms()) r.add_term(pw.first, pw.second, v * invFact);
    }
    return r;
}

BivariateSeries bv_partial_y(const BivariateSeries& a) {
    if (a.total_order() == 0) return BivariateSeries(0);
    BivariateSeries r(a.total_order() - 1);
    for (const auto& [pw, v] : a.terms()) {
        if (pw.first == 0) continue;
        r.add_term(pw.first - 1, pw.second, v * BigRational(static_cast<unsigned long>(pw.first)));
    }
    return r;
}

TruncatedSeries bv_diagonal(const BivariateSeries& a) {
    TruncatedSeries r(a.total_order());
    for (const auto& [pw, v] : a.terms()) {
        std::size_t n = pw.first + pw.second;
        r.set_coeff(n, r.coeff(n) + v);
    }
    return r;
}

} // namespace permcycle
