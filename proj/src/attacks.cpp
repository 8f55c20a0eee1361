#include "permcycle/attacks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permcycle {

namespace {

int resolve_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

/*
 * Key layout used by both attacks: the g subkey is key bits 0..w/2-1 (the
 * bits the final rounds consume), the residual is bits w/2..2w-1, so
 * full = subkey | residual << (w/2).  Because f's schedule reads bit r in
 * round r, the first w/2 rounds of f depend on the subkey alone; scans
 * over the residual share that prefix.
 */
struct Scanner {
    const Codebook& cb;
    RoundEngine eng;
    unsigned subBits;
    unsigned residualBits;
    std::vector<std::pair<Block, Block>> probes; // entries used for verification

    Scanner(const Codebook& cbIn) : cb(cbIn), eng(cbIn.params) {
        const unsigned w = cb.params.width;
        subBits = w / 2;
        residualBits = cb.params.key_bits() - subBits;
        const std::size_t probeCount = std::min<std::size_t>(32, cb.entries.size());
        probes.assign(cb.entries.begin(), cb.entries.begin() + probeCount);
    }

    bool verify(KeeloqKey key) const {
        const unsigned rounds = cb.params.total_rounds();
        for (const auto& [p, c] : probes)
            if (eng.run_forward(p, key, 0, rounds) != c) return false;
        return true;
    }

    // residual values r with f(point) == point under subkey | r << subBits,
    // ascending; the OpenMP kernel of both attacks
    std::vector<std::uint32_t> fixed_point_survivors(Block point, std::uint32_t subkey,
                                                     int workers) const {
        const std::uint64_t residualCount = std::uint64_t(1) << residualBits;
        const unsigned fRounds = cb.params.f_rounds();
        // rounds 0..subBits-1 read only subkey bits
        const Block prefix = eng.run_forward(point, subkey, 0, subBits);

        const unsigned chunkBits = residualBits > 12 ? residualBits - 6 : residualBits;
        const std::uint64_t chunkSize = std::uint64_t(1) << chunkBits;
        const std::uint64_t chunks = residualCount / chunkSize;
        std::vector<std::vector<std::uint32_t>> found(chunks);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#else
        (void)workers;
#endif
        for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
            std::vector<std::uint32_t>& local = found[chunk];
            const std::uint64_t base = chunk * chunkSize;
            for (std::uint64_t r = base; r < base + chunkSize; ++r) {
                const KeeloqKey key = subkey | (static_cast<KeeloqKey>(r) << subBits);
                if (eng.run_forward(prefix, key, subBits, fRounds - subBits) == point)
                    local.push_back(static_cast<std::uint32_t>(r));
            }
        }
        std::vector<std::uint32_t> all;
        for (const auto& chunkHits : found) // chunk order keeps the list sorted
            all.insert(all.end(), chunkHits.begin(), chunkHits.end());
        return all;
    }

    KeeloqKey full_key(std::uint32_t subkey, std::uint32_t residual) const {
        return subkey | (static_cast<KeeloqKey>(residual) << subBits);
    }
};

void require_attackable(const Codebook& cb) {
    if (cb.params.width > 24) throw std::domain_error("attacks limited to width <= 24");
    if (!cb.sourceKey) throw std::invalid_argument("codebook has no source key to verify against");
    if (cb.entries.empty()) throw std::invalid_argument("empty codebook");
}

} // namespace

std::vector<MatchingHit> matching_property_scan(const Codebook& cb) {
    validate_params(cb.params);
    const unsigned w = cb.params.width;
    const unsigned half = w / 2;
    const Block lowMask = (1u << half) - 1;
    RoundEngine eng(cb.params);

    std::vector<MatchingHit> hits;
    for (std::size_t i = 0; i < cb.entries.size(); ++i) {
        const auto [p, c] = cb.entries[i];
        // a fixed point of f^8 leaves g only half a register of freedom:
        // the ciphertext's low half must be the plaintext's high half
        if ((c & lowMask) != (p >> half)) continue;

        // under the fixed-point hypothesis the state entering g is p and
        // every g-round output bit is visible in c, so each round yields
        // its key bit directly
        std::uint32_t subkey = 0;
        Block s = p;
        for (unsigned r = 0; r < half; ++r) {
            unsigned b = (c >> (half + r)) & 1u;
            unsigned kb = b ^ (s & 1u) ^ ((s >> half) & 1u) ^ eng.nlf_of(s);
            subkey |= kb << r;
            s = (s >> 1) | (static_cast<Block>(b) << (w - 1));
        }
        hits.push_back({i, subkey});
    }
    return hits;
}

AttackReport bard_attack(const Codebook& cb, int workers) {
    require_attackable(cb);
    const auto t0 = std::chrono::steady_clock::now();
    const int nWorkers = resolve_workers(workers);

    Scanner scan(cb);
    const unsigned half = cb.params.width / 2;
    const std::uint32_t subkeyCount = 1u << half;
    const unsigned gRounds = cb.params.g_rounds();

    AttackReport rep;
    rep.workers = nWorkers;
    std::vector<KeeloqKey> verified;

    for (std::uint32_t subkey = 0; subkey < subkeyCount; ++subkey) {
        // peel g: candidates are entries whose ciphertext returns to the
        // plaintext, i.e. hypothesized fixed points of f^8
        std::vector<Block> cand;
        for (const auto& [p, c] : cb.entries)
            if (scan.eng.run_backward(c, subkey, 0, gRounds) == p) cand.push_back(p);
        rep.fixedPointsFound += cand.size();
        if (cand.size() < 2) continue;

        // each pair must be fixed by the same f; survivor sets per point
        // make the pair filter an intersection
        std::vector<std::vector<std::uint32_t>> surv(cand.size());
        std::vector<bool> have(cand.size(), false);
        auto survivors = [&](std::size_t i) -> const std::vector<std::uint32_t>& {
            if (!have[i]) {
                surv[i] = scan.fixed_point_survivors(cand[i], subkey, nWorkers);
                have[i] = true;
            }
            return surv[i];
        };

        for (std::size_t i = 0; i < cand.size(); ++i) {
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                ++rep.candidatesExamined;
                const auto& a = survivors(i);
                const auto& b = survivors(j);
                std::vector<std::uint32_t> both;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(both));
                for (std::uint32_t r : both) {
                    const KeeloqKey key = scan.full_key(subkey, r);
                    if (scan.verify(key)) verified.push_back(key);
                }
            }
        }
    }

    if (!verified.empty()) {
        rep.recoveredKey = *std::min_element(verified.begin(), verified.end());
        rep.succeeded = (*rep.recoveredKey == *cb.sourceKey);
    }
    rep.wallTimeSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

AttackReport cbw_attack(const Codebook& cb, int workers) {
    require_attackable(cb);
    const auto t0 = std::chrono::steady_clock::now();
    const int nWorkers = resolve_workers(workers);

    Scanner scan(cb);
    std::vector<MatchingHit> hits = matching_property_scan(cb);

    AttackReport rep;
    rep.workers = nWorkers;
    rep.matchingPropertyHits = hits.size();

    // all genuine fixed points of f^8 carry the true subkey, red herrings
    // spread uniformly, so try frequent subkeys first
    std::map<std::uint32_t, std::uint32_t> freq;
    for (const auto& h : hits) freq[h.impliedSubkey]++;
    std::stable_sort(hits.begin(), hits.end(), [&](const MatchingHit& a, const MatchingHit& b) {
        if (freq[a.impliedSubkey] != freq[b.impliedSubkey])
            return freq[a.impliedSubkey] > freq[b.impliedSubkey];
        if (a.impliedSubkey != b.impliedSubkey) return a.impliedSubkey < b.impliedSubkey;
        return a.entryIndex < b.entryIndex;
    });

    for (const auto& h : hits) {
        ++rep.candidatesExamined;
        const Block p = cb.entries[h.entryIndex].first;
        std::vector<std::uint32_t> surv = scan.fixed_point_survivors(p, h.impliedSubkey, nWorkers);
        bool any = false;
        for (std::uint32_t r : surv) {
            const KeeloqKey key = scan.full_key(h.impliedSubkey, r);
            if (scan.verify(key)) {
                if (!any || key < *rep.recoveredKey) rep.recoveredKey = key;
                any = true;
            }
        }
        if (any) {
            rep.fixedPointsFound = 1;
            rep.succeeded = (*rep.recoveredKey == *cb.sourceKey);
            break; // stop on first verified hit in ranked order
        }
    }
    rep.wallTimeSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace permcycle
