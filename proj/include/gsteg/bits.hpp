#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsteg/bignat.hpp"

namespace gsteg {

// Ordered bit sequence. Bits are stored one per byte; streams in this
// codebase stay far below the sizes where packing would matter.
class BitString {
public:
    BitString() = default;
    explicit BitString(size_t count, bool value = false) : bits_(count, value ? 1 : 0) {}

    // '0'/'1' characters only.
    static BitString from_string(std::string_view s);
    // MSB-first per byte; bit_count <= 8 * bytes.size().
    static BitString from_bytes(const std::vector<uint8_t>& bytes, size_t bit_count);

    std::string to_string() const;
    // MSB-first per byte, final partial byte zero-padded.
    std::vector<uint8_t> to_bytes() const;

    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool bit(size_t i) const { return bits_[i] != 0; }
    void set_bit(size_t i, bool v) { bits_[i] = v ? 1 : 0; }
    void push_back(bool v) { bits_.push_back(v ? 1 : 0); }
    void append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }
    BitString slice(size_t offset, size_t count) const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<uint8_t> bits_;
};

// Big-endian read: the bit at `offset` becomes the most significant bit of
// the result. Reading past the end is an out-of-range error.
BigNat read_bits_as_int(const BitString& s, size_t offset, size_t width);

// Exact inverse of read_bits_as_int. Requires 0 <= m < 2^width.
BitString int_to_bits(const BigNat& m, size_t width);

}  // namespace gsteg
