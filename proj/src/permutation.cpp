#include "permcycle/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permcycle {

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("next_below requires bound >= 1");
    // rejection below the largest multiple of bound keeps draws unbiased
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    return SplitMix64(mix(seed ^ mix(0xD1B54A32D192ED03ull * (index + 1))));
}

Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.mapping.resize(n);
    std::iota(p.mapping.begin(), p.mapping.end(), 0);
    return p;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(mapping.size(), false);
    for (std::uint32_t v : mapping) {
        if (v >= mapping.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation random_permutation(std::size_t n, SplitMix64& rng) {
    Permutation p = Permutation::identity(n);
    for (std::size_t i = n; i > 1; --i) {
        std::uint64_t j = rng.next_below(i);
        std::swap(p.mapping[i - 1], p.mapping[j]);
    }
    return p;
}

CycleDecomposition cycle_decomposition(const Permutation& pi) {
    const std::size_t n = pi.size();
    CycleDecomposition d;
    d.lengthHistogram.assign(n + 1, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> cycle;
        std::uint32_t x = static_cast<std::uint32_t>(start);
        while (!seen[x]) {
            seen[x] = true;
            cycle.push_back(x);
            x = pi.mapping[x];
        }
        d.lengthHistogram[cycle.size()]++;
        d.cycles.push_back(std::move(cycle));
    }
    return d;
}

Permutation permutation_power(const Permutation& pi, std::uint64_t k) {
    const std::size_t n = pi.size();
    Permutation r = Permutation::identity(n);
    if (k == 0) return r;
    CycleDecomposition d = cycle_decomposition(pi);
    for (const auto& cycle : d.cycles) {
        const std::uint64_t len = cycle.size();
        const std::uint64_t shift = k % len;
        for (std::uint64_t j = 0; j < len; ++j)
            r.mapping[cycle[j]] = cycle[(j + shift) % len];
    }
    return r;
}

std::uint64_t count_fixed_points(const Permutation& pi) {
    std::uint64_t c = 0;
    for (std::size_t x = 0; x < pi.size(); ++x)
        if (pi.mapping[x] == x) ++c;
    return c;
}

void enumerate_permutations(std::size_t n,
                            const std::function<void(const Permutation&)>& visit) {
    if (n > 8) throw std::domain_error("enumerate_permutations refuses n > 8");
    Permutation p = Permutation::identity(n);
    do {
        visit(p);
    } while (std::next_permutation(p.mapping.begin(), p.mapping.end()));
}

} // namespace permcycle
