#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gsteg/prng.hpp"

namespace gsteg {

using LatentVector = std::vector<double>;

struct ContinuousImage {
    uint32_t width = 0, height = 0, channels = 0;
    std::vector<double> values;  // strictly inside (0,1); row-major, channel-interleaved
    size_t size() const { return values.size(); }
};

struct QuantizedImage {
    uint32_t width = 0, height = 0, channels = 0;
    std::vector<uint8_t> samples;
    size_t size() const { return samples.size(); }
};

// sample = floor(255 v + 0.5) clamped to [0, 255].
QuantizedImage quantize(const ContinuousImage& x);
// v = (sample + 0.5) / 256; bin midpoints halve the worst-case error.
ContinuousImage dequantize(const QuantizedImage& q);

// Invertible latent <-> image transform. forward and inverse are pure exact
// inverses in continuous arithmetic; channel_roundtrip is the complete
// mapping-error channel a hidden message actually crosses.
class InvertibleMapper {
public:
    virtual ~InvertibleMapper() = default;

    size_t dimension() const { return size_t(width_) * height_ * channels_; }
    uint32_t width() const { return width_; }
    uint32_t height() const { return height_; }
    uint32_t channels() const { return channels_; }

    virtual ContinuousImage forward(const LatentVector& z) const = 0;
    virtual LatentVector inverse(const ContinuousImage& x) const = 0;

    // Default channel: 8-bit quantization of the generated image.
    virtual LatentVector channel_roundtrip(const LatentVector& z) const;

protected:
    InvertibleMapper(uint32_t w, uint32_t h, uint32_t c);
    void check_latent(const LatentVector& z) const;
    void check_image_dims(uint32_t w, uint32_t h, uint32_t c, size_t count) const;
    ContinuousImage wrap(std::vector<double> values) const;

    uint32_t width_, height_, channels_;
};

// forward = logistic, inverse = logit.
class LogisticMapper : public InvertibleMapper {
public:
    LogisticMapper(uint32_t w, uint32_t h, uint32_t c);
    ContinuousImage forward(const LatentVector& z) const override;
    LatentVector inverse(const ContinuousImage& x) const override;
};

// A seeded stack of affine coupling layers: a fixed permutation in front of
// each layer, sparse linear conditioners for log-scale and shift (log-scale
// clamped to [-0.5, 0.5]), halves alternating per layer, and a final
// logistic squash into (0,1). Parameters are frozen at construction; two
// instances built from one seed are bit-identical.
class CouplingFlowMapper : public InvertibleMapper {
public:
    static constexpr uint32_t kLayers = 8;
    static constexpr uint32_t kTaps = 2;

    CouplingFlowMapper(uint32_t w, uint32_t h, uint32_t c, uint64_t param_seed);

    ContinuousImage forward(const LatentVector& z) const override;
    LatentVector inverse(const ContinuousImage& x) const override;

private:
    struct Layer {
        std::vector<uint32_t> perm;  // applied before the coupling
        bool swap_halves = false;
        // transformed coordinate j reads taps[j] from the conditioning half
        std::vector<std::array<uint32_t, kTaps>> taps;
        std::vector<std::array<double, kTaps>> scale_w;
        std::vector<std::array<double, kTaps>> shift_w;
        std::vector<double> scale_b;
        std::vector<double> shift_b;
    };

    void couple_forward(const Layer& layer, std::vector<double>& x) const;
    void couple_inverse(const Layer& layer, std::vector<double>& x) const;

    std::vector<Layer> layers_;
};

// forward = logistic; inverse = logit plus seeded per-element Gaussian noise
// of standard deviation sigma. Models a mapper whose mapping error IS the
// injected noise, so channel_roundtrip skips image quantization.
class NoiseChannelMapper : public InvertibleMapper {
public:
    NoiseChannelMapper(uint32_t w, uint32_t h, uint32_t c, double sigma, uint64_t seed);
    ContinuousImage forward(const LatentVector& z) const override;
    LatentVector inverse(const ContinuousImage& x) const override;
    LatentVector channel_roundtrip(const LatentVector& z) const override;

private:
    double noise_at(size_t index) const;
    double sigma_;
    uint64_t seed_;
};

// "toy" | "identity" | "noise:SIGMA"; toy accepts an optional parameter seed.
std::unique_ptr<InvertibleMapper> make_mapper(const std::string& name, uint32_t w, uint32_t h,
                                              uint32_t c, uint64_t toy_param_seed = 0x5EEDF10ED);

}  // namespace gsteg
