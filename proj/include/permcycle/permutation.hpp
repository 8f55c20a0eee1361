#pragma once

/*
 * Permutations on {0, ..., n-1}: sampling, cycle decomposition, powers.
 *
 * Randomness contract ("permcycle-rng-v1"): SplitMix64 streams.  A stream
 * for (seed, index) starts from state mix(seed XOR mix(0xD1B54A32D192ED03 *
 * (index+1))) and is consumed by Fisher-Yates with rejection-sampled bounded
 * draws, so a (seed, trial) pair names the same permutation on every
 * platform and under any thread count.
 */

#include <cstdint>
#include <functional>
#include <vector>

namespace permcycle {

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next();
    // uniform in [0, bound), bound >= 1, unbiased via rejection
    std::uint64_t next_below(std::uint64_t bound);

    // the (index)-th derived stream for a master seed
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);
};

struct Permutation {
    std::vector<std::uint32_t> mapping; // mapping[x] = pi(x)

    std::size_t size() const { return mapping.size(); }
    static Permutation identity(std::size_t n);
    bool is_valid() const; // bijectivity check
};

struct CycleDecomposition {
    // cycles as vertex lists; canonical form: each cycle starts at its
    // smallest element, cycles sorted by that element
    std::vector<std::vector<std::uint32_t>> cycles;
    // lengthHistogram[l] = number of cycles of length l (index 0 unused)
    std::vector<std::uint32_t> lengthHistogram;

    std::size_t cycle_count() const { return cycles.size(); }
};

Permutation random_permutation(std::size_t n, SplitMix64& rng);
CycleDecomposition cycle_decomposition(const Permutation& pi);

// pi^k built cycle by cycle: a cycle of length l splits into gcd(l, k)
// cycles of length l/gcd(l, k); k = 0 gives the identity
Permutation permutation_power(const Permutation& pi, std::uint64_t k);

std::uint64_t count_fixed_points(const Permutation& pi);

// all n! permutations in lexicographic order; refuses n > 8
void enumerate_permutations(std::size_t n, const std::function<void(const Permutation&)>& visit);

} // namespace permcycle
