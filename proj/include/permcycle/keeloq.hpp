#pragma once

/*
 * KeeLoq and width-parameterized shrunken variants.
 *
 * The cipher is a 32-bit NLFSR run for 528 rounds under a 64-bit key:
 *   L_i = key[(i-32) mod 64] ^ L_{i-32} ^ L_{i-16}
 *         ^ NLF(L_{i-1}, L_{i-6}, L_{i-12}, L_{i-23}, L_{i-30})
 * with plaintext L_0..L_31 and ciphertext L_528..L_559.  528 = 8*64 + 16,
 * so encryption factors as g o f^8 where f is 64 rounds (one full pass of
 * the key schedule) and g is the leftover 16 rounds under key bits 0..15.
 *
 * Bit conventions (these fix the hex I/O and the test vectors): bit i of a
 * key integer is key bit k_i, bit j of a block integer is L_j; the register
 * holds the window L_i..L_{i+w-1} with L_i at bit 0, so a round is
 * state >> 1 with the new bit entering at position w-1.
 *
 * The mini cipher scales every constant by width w: linear taps at register
 * positions {0, w/2}, five NLF tap offsets in 1..w-1 (register position w-t
 * for offset t), key of 2w bits, f = 2w rounds, g = w/2 rounds, 8*2w + w/2
 * rounds in total.  Width 32 with taps {1,6,12,23,30} is exactly KeeLoq.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permcycle {

using KeeloqKey = std::uint64_t; // bit i = key bit k_i
using Block = std::uint32_t;     // bit j = L_j, masked to active width

// NLF(a,b,c,d,e) = d ^ e ^ ac ^ ae ^ bc ^ be ^ cd ^ de ^ ade ^ ace ^ abd ^ abc
// evaluated bitwise; table index is a<<4 | b<<3 | c<<2 | d<<1 | e
unsigned nlf_bit(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e);

struct MiniParams {
    unsigned width = 32;
    std::array<unsigned, 5> nlfTaps{1, 6, 12, 23, 30}; // offsets, newest-first

    unsigned key_bits() const { return 2 * width; }
    unsigned f_rounds() const { return 2 * width; }
    unsigned g_rounds() const { return width / 2; }
    unsigned total_rounds() const { return 8 * f_rounds() + g_rounds(); }
    Block mask() const { return width == 32 ? 0xFFFFFFFFu : ((1u << width) - 1); }
    KeeloqKey key_mask() const {
        return key_bits() == 64 ? ~0ull : ((1ull << key_bits()) - 1);
    }

    // validates width even, 8 <= width <= 32, taps distinct in 1..width-1
    static MiniParams for_width(unsigned w);
    // default taps for a width: full-width offsets scaled by w/32
    // (floor, clamped to >= 1, duplicates bumped up); reproduces
    // {1,3,6,11,15} at w=16 and the KeeLoq taps at w=32
    static std::array<unsigned, 5> default_taps(unsigned w);
};

// throws std::domain_error on out-of-contract widths or taps
void validate_params(const MiniParams& p);

/*
 * Tap geometry baked into register positions, for tight loops: construct
 * once, then push millions of rounds through the inline round functions.
 * Round index r only matters modulo the key schedule length.
 */
class RoundEngine {
public:
    explicit RoundEngine(const MiniParams& p)
        : width_(p.width), keyBits_(p.key_bits()), half_(p.width / 2), mask_(p.mask()) {
        validate_params(p);
        for (int i = 0; i < 5; ++i) pos_[i] = p.width - p.nlfTaps[i];
    }

    unsigned nlf_of(Block s) const {
        unsigned idx = ((s >> pos_[0]) & 1u) << 4 | ((s >> pos_[1]) & 1u) << 3 |
                       ((s >> pos_[2]) & 1u) << 2 | ((s >> pos_[3]) & 1u) << 1 |
                       ((s >> pos_[4]) & 1u);
        return (kNlfTable >> idx) & 1u;
    }

    Block forward(Block s, KeeloqKey key, unsigned r) const {
        unsigned kb = static_cast<unsigned>((key >> (r % keyBits_)) & 1u);
        unsigned nb = kb ^ (s & 1u) ^ ((s >> half_) & 1u) ^ nlf_of(s);
        return (s >> 1) | (static_cast<Block>(nb) << (width_ - 1));
    }

    Block backward(Block s, KeeloqKey key, unsigned r) const {
        unsigned kb = static_cast<unsigned>((key >> (r % keyBits_)) & 1u);
        Block up = (s << 1) & mask_; // window shifted back; bit 0 still unknown
        unsigned ob = kb ^ ((s >> (width_ - 1)) & 1u) ^ ((up >> half_) & 1u) ^ nlf_of(up);
        return up | ob;
    }

    Block run_forward(Block s, KeeloqKey key, unsigned firstRound, unsigned rounds) const {
        for (unsigned r = firstRound; r < firstRound + rounds; ++r) s = forward(s, key, r);
        return s;
    }

    Block run_backward(Block s, KeeloqKey key, unsigned firstRound, unsigned rounds) const {
        for (unsigned r = firstRound + rounds; r-- > firstRound;) s = backward(s, key, r);
        return s;
    }

    unsigned width() const { return width_; }
    unsigned key_bits() const { return keyBits_; }
    Block mask() const { return mask_; }

    // truth table of nlf_bit, bit (a<<4|b<<3|c<<2|d<<1|e)
    static constexpr std::uint32_t kNlfTable = [] {
        std::uint32_t t = 0;
        for (unsigned idx = 0; idx < 32; ++idx) {
            unsigned a = (idx >> 4) & 1, b = (idx >> 3) & 1, c = (idx >> 2) & 1,
                     d = (idx >> 1) & 1, e = idx & 1;
            unsigned v = (d ^ e ^ (a & c) ^ (a & e) ^ (b & c) ^ (b & e) ^ (c & d) ^
                          (d & e) ^ (a & d & e) ^ (a & c & e) ^ (a & b & d) ^ (a & b & c)) & 1u;
            t |= v << idx;
        }
        return t;
    }();

private:
    unsigned width_;
    unsigned keyBits_;
    unsigned half_;
    unsigned pos_[5];
    Block mask_;
};

// full KeeLoq (width 32)
Block keeloq_encrypt(Block plaintext, KeeloqKey key);
Block keeloq_decrypt(Block ciphertext, KeeloqKey key);

// width-parameterized variants; blocks masked to size
Block mini_encrypt(const MiniParams& p, Block plaintext, KeeloqKey key);
Block mini_decrypt(const MiniParams& p, Block ciphertext, KeeloqKey key);
// one application of f (2w rounds, key bits 0..2w-1)
Block mini_f(const MiniParams& p, Block x, KeeloqKey key);
Block mini_f_inverse(const MiniParams& p, Block x, KeeloqKey key);
// the g tail (w/2 rounds); only key bits 0..w/2-1 are read
Block mini_g(const MiniParams& p, Block x, KeeloqKey key);
Block mini_g_inverse(const MiniParams& p, Block x, KeeloqKey key);

struct Codebook {
    MiniParams params;
    // (plaintext, ciphertext) pairs, ascending by plaintext
    std::vector<std::pair<Block, Block>> entries;
    std::optional<KeeloqKey> sourceKey; // test fixtures only

    double eta() const; // fraction of the 2^width domain present
};

// eta = 1 builds the full codebook; eta < 1 keeps a uniformly sampled
// subset of round(eta * 2^width) distinct plaintexts (seeded shuffle)
Codebook build_codebook(const MiniParams& p, KeeloqKey key, double eta, std::uint64_t seed);

/*
 * Codebook file format, little-endian throughout:
 *   magic   "PCLB" (4 bytes)
 *   version u16 (currently 1)
 *   width   u16
 *   count   u64
 *   entries count * 2 values, each ceil(width/8) bytes: p0 c0 p1 c1 ...
 * Neither the source key nor the tap configuration is stored; loading a
 * codebook yields the default taps for its width.
 */
void save_codebook(const Codebook& cb, const std::string& path);
Codebook load_codebook(const std::string& path);

} // namespace permcycle
