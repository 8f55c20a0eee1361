#include "permcycle/divisors.hpp"

#include <algorithm>
#include <stdexcept>

namespace permcycle {

BigRational DivisorProfile::sigma_over_k() const {
    return make_rational(sigma, BigInt(static_cast<unsigned long>(k)));
}

DivisorProfile divisor_profile(std::uint64_t k) {
    if (k == 0) throw std::domain_error("divisor_profile requires k >= 1");
    DivisorProfile p;
    p.k = k;
    for (std::uint64_t i = 1; i <= k / i; ++i) {
        if (k % i != 0) continue;
        p.divisors.push_back(i);
        if (i != k / i) p.divisors.push_back(k / i);
    }
    std::sort(p.divisors.begin(), p.divisors.end());
    p.tau = p.divisors.size();
    p.sigma = 0;
    for (std::uint64_t d : p.divisors) p.sigma += BigInt(static_cast<unsigned long>(d));
    return p;
}

} // namespace permcycle
