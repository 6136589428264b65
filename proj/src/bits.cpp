#include "gsteg/bits.hpp"

#include <stdexcept>

namespace gsteg {

BitString BitString::from_string(std::string_view s) {
    BitString out;
    out.bits_.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("BitString: expected '0' or '1'");
        out.bits_.push_back(c == '1' ? 1 : 0);
    }
    return out;
}

BitString BitString::from_bytes(const std::vector<uint8_t>& bytes, size_t bit_count) {
    if (bit_count > bytes.size() * 8)
        throw std::out_of_range("BitString::from_bytes: bit_count exceeds input");
    BitString out;
    out.bits_.reserve(bit_count);
    for (size_t i = 0; i < bit_count; ++i)
        out.bits_.push_back((bytes[i / 8] >> (7 - i % 8)) & 1u);
    return out;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

std::vector<uint8_t> BitString::to_bytes() const {
    std::vector<uint8_t> bytes((bits_.size() + 7) / 8, 0);
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) bytes[i / 8] |= uint8_t(1u << (7 - i % 8));
    return bytes;
}

BitString BitString::slice(size_t offset, size_t count) const {
    if (offset + count > bits_.size()) throw std::out_of_range("BitString::slice out of range");
    BitString out;
    out.bits_.assign(bits_.begin() + offset, bits_.begin() + offset + count);
    return out;
}

BigNat read_bits_as_int(const BitString& s, size_t offset, size_t width) {
    if (offset + width > s.size())
        throw std::out_of_range("read_bits_as_int: message exhausted");
    BigNat m = 0;
    for (size_t i = 0; i < width; ++i) {
        m <<= 1;
        if (s.bit(offset + i)) m |= 1;
    }
    return m;
}

BitString int_to_bits(const BigNat& m, size_t width) {
    if (m < 0) throw std::out_of_range("int_to_bits: negative value");
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > width && m != 0)
        throw std::out_of_range("int_to_bits: value does not fit width");
    BitString out(width);
    for (size_t i = 0; i < width; ++i)
        out.set_bit(i, mpz_tstbit(m.get_mpz_t(), width - 1 - i) != 0);
    return out;
}

}  // namespace gsteg
