#include "gsteg/io.hpp"

#include <cstring>
#include <fstream>

#include "gsteg/errors.hpp"

namespace gsteg {

namespace {

constexpr uint64_t kMaxFileElements = uint64_t(1) << 31;

void put_u32le(std::vector<uint8_t>& out, uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(uint8_t(v >> (8 * b)));
}

uint32_t get_u32le(const std::vector<uint8_t>& in, size_t off) {
    uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= uint32_t(in[off + b]) << (8 * b);
    return v;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open '" + path + "'");
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                               std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw FormatError("cannot open '" + path + "' for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw FormatError("short write to '" + path + "'");
}

}  // namespace

void write_rti1(const std::string& path, const QuantizedImage& img) {
    std::vector<uint8_t> out;
    out.reserve(16 + img.samples.size());
    out.insert(out.end(), {'R', 'T', 'I', '1'});
    put_u32le(out, img.width);
    put_u32le(out, img.height);
    put_u32le(out, img.channels);
    out.insert(out.end(), img.samples.begin(), img.samples.end());
    write_file(path, out);
}

QuantizedImage read_rti1(const std::string& path) {
    const auto bytes = read_file(path);
    if (bytes.size() < 16 || std::memcmp(bytes.data(), "RTI1", 4) != 0)
        throw FormatError("'" + path + "' is not an RTI1 image");
    QuantizedImage img;
    img.width = get_u32le(bytes, 4);
    img.height = get_u32le(bytes, 8);
    img.channels = get_u32le(bytes, 12);
    const uint64_t count = uint64_t(img.width) * img.height * img.channels;
    if (count == 0 || count > kMaxFileElements)
        throw FormatError("'" + path + "' declares an unusable image size");
    if (bytes.size() != 16 + count)
        throw FormatError("'" + path + "' is truncated or padded");
    img.samples.assign(bytes.begin() + 16, bytes.end());
    return img;
}

void write_rtf1(const std::string& path, const LatentVector& z) {
    std::vector<uint8_t> out;
    out.reserve(8 + 8 * z.size());
    out.insert(out.end(), {'R', 'T', 'F', '1'});
    put_u32le(out, static_cast<uint32_t>(z.size()));
    for (double v : z) {
        uint64_t bits;
        std::memcpy(&bits, &v, 8);
        for (int b = 0; b < 8; ++b) out.push_back(uint8_t(bits >> (8 * b)));
    }
    write_file(path, out);
}

LatentVector read_rtf1(const std::string& path) {
    const auto bytes = read_file(path);
    if (bytes.size() < 8 || std::memcmp(bytes.data(), "RTF1", 4) != 0)
        throw FormatError("'" + path + "' is not an RTF1 latent dump");
    const uint32_t dim = get_u32le(bytes, 4);
    if (dim > kMaxFileElements || bytes.size() != 8 + uint64_t(dim) * 8)
        throw FormatError("'" + path + "' is truncated or padded");
    LatentVector z(dim);
    for (uint32_t i = 0; i < dim; ++i) {
        uint64_t bits = 0;
        for (int b = 0; b < 8; ++b) bits |= uint64_t(bytes[8 + 8 * size_t(i) + b]) << (8 * b);
        double v;
        std::memcpy(&v, &bits, 8);
        z[i] = v;
    }
    return z;
}

BitString read_secret(const std::string& path) {
    const auto bytes = read_file(path);
    return BitString::from_bytes(bytes, bytes.size() * 8);
}

void write_secret(const std::string& path, const BitString& payload) {
    write_file(path, payload.to_bytes());
}

}  // namespace gsteg
