#include "permcycle/keeloq.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "permcycle/permutation.hpp"

namespace permcycle {

unsigned nlf_bit(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e) {
    return (d ^ e ^ (a & c) ^ (a & e) ^ (b & c) ^ (b & e) ^ (c & d) ^ (d & e) ^
            (a & d & e) ^ (a & c & e) ^ (a & b & d) ^ (a & b & c)) & 1u;
}

MiniParams MiniParams::for_width(unsigned w) {
    MiniParams p;
    p.width = w;
    p.nlfTaps = default_taps(w); // validates the width
    return p;
}

std::array<unsigned, 5> MiniParams::default_taps(unsigned w) {
    if (w < 8 || w > 32 || w % 2 != 0) throw std::domain_error("width must be even, 8..32");
    const unsigned full[5] = {1, 6, 12, 23, 30};
    std::array<unsigned, 5> taps{};
    for (int i = 0; i < 5; ++i) {
        unsigned t = std::max(1u, full[i] * w / 32);
        // keep offsets strictly increasing and below the width
        if (i > 0 && t <= taps[i - 1]) t = taps[i - 1] + 1;
        if (t >= w) throw std::domain_error("tap offsets exceed width");
        taps[i] = t;
    }
    return taps;
}

void validate_params(const MiniParams& p) {
    if (p.width < 8 || p.width > 32 || p.width % 2 != 0)
        throw std::domain_error("width must be even, 8..32");
    for (int i = 0; i < 5; ++i) {
        if (p.nlfTaps[i] < 1 || p.nlfTaps[i] >= p.width)
            throw std::domain_error("NLF taps must lie in 1..width-1");
        for (int j = i + 1; j < 5; ++j)
            if (p.nlfTaps[i] == p.nlfTaps[j]) throw std::domain_error("NLF taps must be distinct");
    }
}

Block keeloq_encrypt(Block plaintext, KeeloqKey key) {
    return mini_encrypt(MiniParams{}, plaintext, key);
}

Block keeloq_decrypt(Block ciphertext, KeeloqKey key) {
    return mini_decrypt(MiniParams{}, ciphertext, key);
}

Block mini_encrypt(const MiniParams& p, Block plaintext, KeeloqKey key) {
    RoundEngine g(p);
    return g.run_forward(plaintext & g.mask(), key, 0, p.total_rounds());
}

Block mini_decrypt(const MiniParams& p, Block ciphertext, KeeloqKey key) {
    RoundEngine g(p);
    return g.run_backward(ciphertext & g.mask(), key, 0, p.total_rounds());
}

Block mini_f(const MiniParams& p, Block x, KeeloqKey key) {
    RoundEngine g(p);
    return g.run_forward(x & g.mask(), key, 0, p.f_rounds());
}

Block mini_f_inverse(const MiniParams& p, Block x, KeeloqKey key) {
    RoundEngine g(p);
    return g.run_backward(x & g.mask(), key, 0, p.f_rounds());
}

Block mini_g(const MiniParams& p, Block x, KeeloqKey key) {
    RoundEngine g(p);
    // the g rounds sit at schedule offset 8*2w, a multiple of the key
    // length, so starting from round 0 reads the same key bits 0..w/2-1
    return g.run_forward(x & g.mask(), key, 0, p.g_rounds());
}

Block mini_g_inverse(const MiniParams& p, Block x, KeeloqKey key) {
    RoundEngine g(p);
    return g.run_backward(x & g.mask(), key, 0, p.g_rounds());
}

double Codebook::eta() const {
    return static_cast<double>(entries.size()) /
           static_cast<double>(std::uint64_t(1) << params.width);
}

Codebook build_codebook(const MiniParams& p, KeeloqKey key, double eta, std::uint64_t seed) {
    validate_params(p);
    if (p.width > 24) throw std::domain_error("codebooks limited to width <= 24");
    if (eta <= 0 || eta > 1) throw std::domain_error("eta must lie in (0, 1]");

    const std::uint64_t domain = std::uint64_t(1) << p.width;
    const std::uint64_t keep = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(eta * static_cast<double>(domain) + 0.5));

    Codebook cb;
    cb.params = p;
    cb.sourceKey = key & p.key_mask();

    std::vector<std::uint32_t> points(domain);
    for (std::uint64_t x = 0; x < domain; ++x) points[x] = static_cast<std::uint32_t>(x);
    if (keep < domain) {
        SplitMix64 rng = SplitMix64::stream(seed, 0);
        for (std::uint64_t i = domain; i > 1; --i) {
            std::uint64_t j = rng.next_below(i);
            std::swap(points[i - 1], points[j]);
        }
        points.resize(keep);
        std::sort(points.begin(), points.end());
    }

    RoundEngine g(p);
    const unsigned rounds = p.total_rounds();
    cb.entries.reserve(points.size());
    for (std::uint32_t pt : points)
        cb.entries.emplace_back(pt, g.run_forward(pt, *cb.sourceKey, 0, rounds));
    return cb;
}

namespace {

constexpr char kMagic[4] = {'P', 'C', 'L', 'B'};
constexpr std::uint16_t kVersion = 1;
constexpr std::uint64_t kMaxEntries = std::uint64_t(1) << 25;

void put_le(std::string& out, std::uint64_t v, unsigned bytes) {
    for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_le(const unsigned char* p, unsigned bytes) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

} // namespace

void save_codebook(const Codebook& cb, const std::string& path) {
    std::string out;
    out.append(kMagic, 4);
    put_le(out, kVersion, 2);
    put_le(out, cb.params.width, 2);
    put_le(out, cb.entries.size(), 8);
    const unsigned vb = (cb.params.width + 7) / 8;
    for (const auto& [pt, ct] : cb.entries) {
        put_le(out, pt, vb);
        put_le(out, ct, vb);
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw std::runtime_error("short write to " + path);
}

Codebook load_codebook(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (data.size() < 16 || std::memcmp(data.data(), kMagic, 4) != 0)
        throw std::runtime_error(path + ": not a codebook file");
    const auto* p = reinterpret_cast<const unsigned char*>(data.data());
    const auto version = static_cast<std::uint16_t>(get_le(p + 4, 2));
    if (version != kVersion) throw std::runtime_error(path + ": unsupported codebook version");
    const auto width = static_cast<unsigned>(get_le(p + 6, 2));
    const std::uint64_t count = get_le(p + 8, 8);
    if (count > kMaxEntries) throw std::runtime_error(path + ": implausible entry count");

    Codebook cb;
    cb.params = MiniParams::for_width(width);
    const unsigned vb = (width + 7) / 8;
    if (data.size() != 16 + count * 2 * vb) throw std::runtime_error(path + ": truncated codebook");
    cb.entries.reserve(count);
    const unsigned char* q = p + 16;
    for (std::uint64_t i = 0; i < count; ++i, q += 2 * vb)
        cb.entries.emplace_back(static_cast<Block>(get_le(q, vb)),
                                static_cast<Block>(get_le(q + vb, vb)));
    return cb;
}

} // namespace permcycle
