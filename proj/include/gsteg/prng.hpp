#pragma once

// Deterministic PRNG stack: SplitMix64 expands a plain seed, or a 256-bit
// key plus a domain-separation tag, into the state of a xoshiro256**
// stream. The algorithms are pinned bit-for-bit so that identical inputs
// produce identical streams everywhere.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gsteg/errors.hpp"

namespace gsteg {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// One-shot mix of a 64-bit value (the SplitMix64 output function).
inline uint64_t mix64(uint64_t x) { return SplitMix64(x).next(); }

// 256-bit shared secret. Parsed from 64 hex characters; words are the four
// consecutive 8-byte chunks interpreted little-endian.
class Key256 {
public:
    Key256() : bytes_{} {}

    static Key256 from_hex(std::string_view hex);

    uint64_t word(size_t i) const {
        uint64_t w = 0;
        for (size_t b = 0; b < 8; ++b) w |= uint64_t(bytes_[i * 8 + b]) << (8 * b);
        return w;
    }

    const std::array<uint8_t, 32>& bytes() const { return bytes_; }

    friend bool operator==(const Key256&, const Key256&) = default;

private:
    std::array<uint8_t, 32> bytes_;
};

// Packs up to 8 ASCII characters into a domain-separation tag.
constexpr uint64_t pack_tag(std::string_view s) {
    uint64_t v = 0;
    for (char c : s) v = (v << 8) | static_cast<uint8_t>(c);
    return v;
}

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : state_) w = sm.next();
    }

    // Keyed stream: state = splitmix(tag) xor key words. The tag separates
    // the scramble / padding / leftover-order uses of one key.
    Xoshiro256ss(const Key256& key, uint64_t domain_tag) {
        SplitMix64 sm(domain_tag);
        for (size_t i = 0; i < 4; ++i) state_[i] = sm.next() ^ key.word(i);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = domain_tag | 1;
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Strictly inside (0, 1).
    double uniform01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    // Uniform in [0, bound). Modulo draw; the bias is immaterial at the
    // bounds used here and keeps the stream definition trivial.
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_;
};

// Fisher-Yates permutation of {0, ..., size-1} driven by `rng`.
inline std::vector<uint32_t> random_permutation(Xoshiro256ss& rng, uint32_t size) {
    std::vector<uint32_t> perm(size);
    for (uint32_t i = 0; i < size; ++i) perm[i] = i;
    for (uint32_t i = size; i > 1; --i) {
        uint32_t j = static_cast<uint32_t>(rng.below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

inline Key256 Key256::from_hex(std::string_view hex) {
    if (hex.size() != 64) throw ConfigError("key must be exactly 64 hex characters");
    Key256 key;
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ConfigError("key contains a non-hex character");
    };
    for (size_t i = 0; i < 32; ++i)
        key.bytes_[i] = static_cast<uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    return key;
}

}  // namespace gsteg
