#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permcycle/keeloq.hpp"
#include "permcycle/permutation.hpp"

using namespace permcycle;

namespace {

/*
 * Independent transcription of the shift-register recurrence, kept
 * deliberately naive: the whole L sequence as a bit vector, one bit per
 * round, straight from
 *   L_i = key[(i-w) mod 2w] ^ L_{i-w} ^ L_{i-w/2}
 *         ^ NLF(L_{i-t0}, L_{i-t1}, L_{i-t2}, L_{i-t3}, L_{i-t4}).
 * The production code must agree with this bit for bit.
 */
unsigned naive_nlf(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e) {
    return (d ^ e ^ (a & c) ^ (a & e) ^ (b & c) ^ (b & e) ^ (c & d) ^ (d & e) ^
            (a & d & e) ^ (a & c & e) ^ (a & b & d) ^ (a & b & c)) &
           1u;
}

Block naive_rounds(const MiniParams& p, Block input, KeeloqKey key, unsigned firstRound,
                   unsigned rounds) {
    const unsigned w = p.width;
    std::vector<unsigned> L(w + rounds);
    for (unsigned j = 0; j < w; ++j) L[j] = (input >> j) & 1u;
    for (unsigned r = 0; r < rounds; ++r) {
        const unsigned i = w + r;
        const unsigned nl =
            naive_nlf(L[i - p.nlfTaps[0]], L[i - p.nlfTaps[1]], L[i - p.nlfTaps[2]],
                      L[i - p.nlfTaps[3]], L[i - p.nlfTaps[4]]);
        const unsigned kb =
            static_cast<unsigned>((key >> ((firstRound + r) % p.key_bits())) & 1u);
        L[i] = kb ^ L[r] ^ L[r + w / 2] ^ nl;
    }
    Block out = 0;
    for (unsigned j = 0; j < w; ++j) out |= static_cast<Block>(L[rounds + j] & 1u) << j;
    return out;
}

Block naive_encrypt(const MiniParams& p, Block x, KeeloqKey key) {
    return naive_rounds(p, x, key, 0, p.total_rounds());
}

} // namespace

TEST_CASE("NLF truth table is the published constant") {
    CHECK(RoundEngine::kNlfTable == 0x3A5C742Eu);
    for (unsigned idx = 0; idx < 32; ++idx) {
        const unsigned a = (idx >> 4) & 1, b = (idx >> 3) & 1, c = (idx >> 2) & 1,
                       d = (idx >> 1) & 1, e = idx & 1;
        CHECK(nlf_bit(a, b, c, d, e) == ((0x3A5C742Eu >> idx) & 1u));
        CHECK(nlf_bit(a, b, c, d, e) == naive_nlf(a, b, c, d, e));
    }
}

TEST_CASE("full-width known answers") {
    CHECK(keeloq_encrypt(0x12345678u, 0x5CEC6701B79FD949ull) == 0x9E26D0DDu);
    CHECK(keeloq_encrypt(0xF5849EABu, 0x0123456789ABCDEFull) == 0xA6C750F7u);
    CHECK(keeloq_encrypt(0xDEADBEEFu, 0x30573F7730573F77ull) == 0x93CA0482u);
    CHECK(keeloq_encrypt(0x00000000u, 0x0000000000000000ull) == 0x00000000u);
    CHECK(keeloq_encrypt(0xFFFFFFFFu, 0xFFFFFFFFFFFFFFFFull) == 0xFFFFFFFFu);

    CHECK(keeloq_decrypt(0x9E26D0DDu, 0x5CEC6701B79FD949ull) == 0x12345678u);
    CHECK(keeloq_decrypt(0xA6C750F7u, 0x0123456789ABCDEFull) == 0xF5849EABu);
}

TEST_CASE("mini-width known answers") {
    const MiniParams w12 = MiniParams::for_width(12);
    REQUIRE(w12.nlfTaps == std::array<unsigned, 5>{1, 2, 4, 8, 11});
    CHECK(mini_encrypt(w12, 0x5A5u, 0x123456ull) == 0xFE4u);
    CHECK(mini_encrypt(w12, 0xABCu, 0xF0F0F0ull) == 0xB53u);

    const MiniParams w16 = MiniParams::for_width(16);
    REQUIRE(w16.nlfTaps == std::array<unsigned, 5>{1, 3, 6, 11, 15});
    CHECK(mini_encrypt(w16, 0x1234u, 0x9E3779B9ull) == 0x1C48u);
}

TEST_CASE("production cipher agrees with the naive transcription") {
    SplitMix64 rng(0x100DDull);
    for (unsigned w : {8u, 10u, 12u, 16u, 20u, 24u, 28u, 32u}) {
        const MiniParams p = MiniParams::for_width(w);
        for (int i = 0; i < 40; ++i) {
            const KeeloqKey key = rng.next() & p.key_mask();
            const Block x = static_cast<Block>(rng.next()) & p.mask();
            CHECK(mini_encrypt(p, x, key) == naive_encrypt(p, x, key));
            CHECK(mini_f(p, x, key) == naive_rounds(p, x, key, 0, p.f_rounds()));
            CHECK(mini_g(p, x, key) == naive_rounds(p, x, key, 0, p.g_rounds()));
        }
    }
}

TEST_CASE("width 32 specializes to the full cipher") {
    const MiniParams p = MiniParams::for_width(32);
    CHECK(p.total_rounds() == 528);
    SplitMix64 rng(0xFACADE);
    for (int i = 0; i < 200; ++i) {
        const KeeloqKey key = rng.next();
        const Block x = static_cast<Block>(rng.next());
        CHECK(mini_encrypt(p, x, key) == keeloq_encrypt(x, key));
        CHECK(mini_decrypt(p, x, key) == keeloq_decrypt(x, key));
    }
}

TEST_CASE("round trips across widths") {
    SplitMix64 rng(0x0FF1CE);
    for (unsigned w = 8; w <= 32; w += 2) {
        const MiniParams p = MiniParams::for_width(w);
        for (int i = 0; i < 50; ++i) {
            const KeeloqKey key = rng.next() & p.key_mask();
            const Block x = static_cast<Block>(rng.next()) & p.mask();
            CHECK(mini_decrypt(p, mini_encrypt(p, x, key), key) == x);
            CHECK(mini_f_inverse(p, mini_f(p, x, key), key) == x);
            CHECK(mini_g_inverse(p, mini_g(p, x, key), key) == x);
        }
    }
}

TEST_CASE("encryption factors through eight f passes and a g tail") {
    SplitMix64 rng(0xCAFE);
    for (unsigned w : {12u, 16u, 32u}) {
        const MiniParams p = MiniParams::for_width(w);
        for (int i = 0; i < 30; ++i) {
            const KeeloqKey key = rng.next() & p.key_mask();
            const Block x = static_cast<Block>(rng.next()) & p.mask();
            Block y = x;
            for (int pass = 0; pass < 8; ++pass) y = mini_f(p, y, key);
            y = mini_g(p, y, key);
            CHECK(y == mini_encrypt(p, x, key));
        }
    }
}

TEST_CASE("f is a bijection at width 12") {
    const MiniParams p = MiniParams::for_width(12);
    for (KeeloqKey key : {0x123456ull, 0xF0F0F0ull}) {
        std::set<Block> image;
        for (Block x = 0; x <= p.mask(); ++x) image.insert(mini_f(p, x, key));
        CHECK(image.size() == 4096);
    }
}

TEST_CASE("the g tail always exposes the input's high half") {
    // g shifts the register w/2 positions, so the low half of g(x) is the
    // high half of x no matter the key; for a fixed point of f^8 this is
    // exactly the plaintext/ciphertext matching property
    SplitMix64 rng(0x6E);
    for (unsigned w : {12u, 16u}) {
        const MiniParams p = MiniParams::for_width(w);
        const unsigned half = w / 2;
        const Block lowMask = (1u << half) - 1;
        for (int i = 0; i < 200; ++i) {
            const KeeloqKey key = rng.next() & p.key_mask();
            const Block x = static_cast<Block>(rng.next()) & p.mask();
            CHECK((mini_g(p, x, key) & lowMask) == (x >> half));
        }
    }
}

TEST_CASE("a planted f fixed point surfaces in the ciphertext") {
    const MiniParams p = MiniParams::for_width(16);
    const KeeloqKey key = 0x13572468ull;
    // exhaustive search of this key finds exactly one fixed point of f
    const Block fp = 0xF20Fu;
    CHECK(mini_f(p, fp, key) == fp);
    const Block c = mini_encrypt(p, fp, key);
    CHECK(c == 0x30F2u);
    CHECK((c & 0xFFu) == (fp >> 8));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(MiniParams::for_width(7), std::domain_error);
    CHECK_THROWS_AS(MiniParams::for_width(6), std::domain_error);
    CHECK_THROWS_AS(MiniParams::for_width(34), std::domain_error);

    MiniParams bad = MiniParams::for_width(12);
    bad.nlfTaps = {1, 2, 4, 8, 12}; // tap at the width
    CHECK_THROWS_AS(validate_params(bad), std::domain_error);
    bad.nlfTaps = {0, 2, 4, 8, 11}; // tap below 1
    CHECK_THROWS_AS(validate_params(bad), std::domain_error);
    bad.nlfTaps = {1, 2, 4, 8, 8}; // duplicate
    CHECK_THROWS_AS(validate_params(bad), std::domain_error);

    for (unsigned w = 8; w <= 32; w += 2) CHECK_NOTHROW(validate_params(MiniParams::for_width(w)));
    CHECK(MiniParams::default_taps(32) == std::array<unsigned, 5>{1, 6, 12, 23, 30});
}

TEST_CASE("codebooks enumerate the domain") {
    const MiniParams p = MiniParams::for_width(10);
    const KeeloqKey key = 0xABCDEull & p.key_mask();
    const Codebook full = build_codebook(p, key, 1.0, 42);
    REQUIRE(full.entries.size() == 1024);
    CHECK(full.eta() == 1.0);
    REQUIRE(full.sourceKey.has_value());
    CHECK(*full.sourceKey == key);
    for (std::size_t i = 0; i < full.entries.size(); ++i) {
        CHECK(full.entries[i].first == static_cast<Block>(i));
        CHECK(full.entries[i].second == mini_encrypt(p, full.entries[i].first, key));
    }

    const Codebook part = build_codebook(p, key, 0.25, 42);
    CHECK(part.entries.size() == 256);
    CHECK(part.eta() == 0.25);
    std::set<Block> plains;
    for (const auto& [pt, ct] : part.entries) {
        plains.insert(pt);
        CHECK(ct == mini_encrypt(p, pt, key));
    }
    CHECK(plains.size() == 256);
    CHECK(std::is_sorted(part.entries.begin(), part.entries.end()));

    const Codebook same = build_codebook(p, key, 0.25, 42);
    CHECK(same.entries == part.entries);
    const Codebook other = build_codebook(p, key, 0.25, 43);
    CHECK(other.entries != part.entries);

    CHECK_THROWS_AS(build_codebook(MiniParams::for_width(26), 0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS(build_codebook(p, key, 0.0, 1), std::domain_error);
    CHECK_THROWS_AS(build_codebook(p, key, 1.5, 1), std::domain_error);
}

TEST_CASE("codebook files round trip") {
    const MiniParams p = MiniParams::for_width(12);
    const KeeloqKey key = 0x5A5A5Aull;
    const Codebook cb = build_codebook(p, key, 0.125, 7);

    const std::string path = "test_codebook_roundtrip.pclb";
    save_codebook(cb, path);
    const Codebook back = load_codebook(path);
    CHECK(back.params.width == 12);
    CHECK(back.params.nlfTaps == MiniParams::default_taps(12));
    CHECK(back.entries == cb.entries);
    CHECK(!back.sourceKey.has_value()); // the file format stores no key
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_codebook("no_such_codebook.pclb"), std::runtime_error);
}
