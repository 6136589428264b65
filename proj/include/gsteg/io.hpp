#pragma once

#include <string>
#include <vector>

#include "gsteg/bits.hpp"
#include "gsteg/mapper.hpp"

namespace gsteg {

// RTI1 stego-image file: magic "RTI1", u32le width/height/channels, then
// width*height*channels samples row-major, channel-interleaved.
void write_rti1(const std::string& path, const QuantizedImage& img);
QuantizedImage read_rti1(const std::string& path);

// RTF1 latent dump: magic "RTF1", u32le dimension, then dimension 64-bit
// little-endian IEEE-754 values.
void write_rtf1(const std::string& path, const LatentVector& z);
LatentVector read_rtf1(const std::string& path);

// Secrets are raw byte files, bits MSB-first per byte.
BitString read_secret(const std::string& path);
void write_secret(const std::string& path, const BitString& payload);

}  // namespace gsteg
