#pragma once

/*
 * Slide-style key-recovery attacks on the mini cipher, at widths small
 * enough to run on a desk (w <= 24).
 *
 * Both attacks exploit E = g o f^8 and fixed points of f:
 *
 *  - bard_attack guesses the w/2-bit g subkey, peels g off every codebook
 *    entry, keeps plaintexts with g^-1(c) = p (candidate fixed points of
 *    f^8), and for every pair of candidates brute-forces the remaining key
 *    bits against f(p1) = p1 and f(p2) = p2, then verifies survivors on
 *    probe entries.  Needs two genuine fixed points of f to land the true
 *    key, hence the 1 - 2/e success heuristic at eta = 1.
 *
 *  - cbw_attack scans for the matching property (a fixed point of f^8
 *    shows up as ciphertext low half == plaintext high half at matching
 *    register offsets), derives the implied g subkey for each hit (one key
 *    bit per g round), ranks (entry, subkey) pairs by subkey frequency,
 *    and brute-forces the rest of the key down the ranked list, stopping
 *    at the first verified hit.  One genuine fixed point of f suffices,
 *    hence 1 - 1/e.
 *
 * Brute-force scans are OpenMP kernels; verified keys are merged by
 * canonical (smallest) key order so reports do not depend on worker count.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "permcycle/keeloq.hpp"

namespace permcycle {

struct AttackReport {
    bool succeeded = false;
    std::optional<KeeloqKey> recoveredKey;
    std::uint64_t fixedPointsFound = 0;      // bard: candidates collected; cbw: confirmed
    std::uint64_t candidatesExamined = 0;    // bard: pairs filtered; cbw: list entries tried
    std::uint64_t matchingPropertyHits = 0;  // cbw only
    double wallTimeSeconds = 0;
    int workers = 1;
};

// matching-property scan: all (entry index, implied subkey) hits
struct MatchingHit {
    std::size_t entryIndex = 0;
    std::uint32_t impliedSubkey = 0;
};

std::vector<MatchingHit> matching_property_scan(const Codebook& cb);

// Success means the recovered key equals cb.sourceKey (which must be set).
// workers = 0 picks the library default.
AttackReport bard_attack(const Codebook& cb, int workers = 0);
AttackReport cbw_attack(const Codebook& cb, int workers = 0);

} // namespace permcycle
