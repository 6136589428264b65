#include "gsteg/mapper.hpp"

#include <algorithm>
#include <cmath>

#include "gsteg/errors.hpp"
#include "gsteg/grouping.hpp"

namespace gsteg {

namespace {

double logistic(double u) { return 1.0 / (1.0 + std::exp(-u)); }
double logit(double v) { return std::log(v) - std::log1p(-v); }

constexpr double kScaleClamp = 0.5;

double clamp_scale(double s) { return std::clamp(s, -kScaleClamp, kScaleClamp); }

}  // namespace

QuantizedImage quantize(const ContinuousImage& x) {
    QuantizedImage q;
    q.width = x.width;
    q.height = x.height;
    q.channels = x.channels;
    q.samples.resize(x.values.size());
    for (size_t i = 0; i < x.values.size(); ++i) {
        double s = std::floor(255.0 * x.values[i] + 0.5);
        q.samples[i] = static_cast<uint8_t>(std::clamp(s, 0.0, 255.0));
    }
    return q;
}

ContinuousImage dequantize(const QuantizedImage& q) {
    ContinuousImage x;
    x.width = q.width;
    x.height = q.height;
    x.channels = q.channels;
    x.values.resize(q.samples.size());
    for (size_t i = 0; i < q.samples.size(); ++i)
        x.values[i] = (q.samples[i] + 0.5) / 256.0;
    return x;
}

InvertibleMapper::InvertibleMapper(uint32_t w, uint32_t h, uint32_t c)
    : width_(w), height_(h), channels_(c) {
    if (dimension() == 0) throw ConfigError("mapper: zero dimension");
}

void InvertibleMapper::check_latent(const LatentVector& z) const {
    if (z.size() != dimension())
        throw ConfigError("mapper: latent dimension " + std::to_string(z.size()) +
                          " does not match mapper dimension " + std::to_string(dimension()));
}

void InvertibleMapper::check_image_dims(uint32_t w, uint32_t h, uint32_t c, size_t count) const {
    if (w != width_ || h != height_ || c != channels_ || count != dimension())
        throw ConfigError("mapper: image dimensions do not match mapper dimensions");
}

ContinuousImage InvertibleMapper::wrap(std::vector<double> values) const {
    ContinuousImage x;
    x.width = width_;
    x.height = height_;
    x.channels = channels_;
    x.values = std::move(values);
    return x;
}

LatentVector InvertibleMapper::channel_roundtrip(const LatentVector& z) const {
    return inverse(dequantize(quantize(forward(z))));
}

LogisticMapper::LogisticMapper(uint32_t w, uint32_t h, uint32_t c) : InvertibleMapper(w, h, c) {}

ContinuousImage LogisticMapper::forward(const LatentVector& z) const {
    check_latent(z);
    std::vector<double> out(z.size());
    for (size_t i = 0; i < z.size(); ++i) out[i] = logistic(z[i]);
    return wrap(std::move(out));
}

LatentVector LogisticMapper::inverse(const ContinuousImage& x) const {
    check_image_dims(x.width, x.height, x.channels, x.values.size());
    LatentVector z(x.values.size());
    for (size_t i = 0; i < x.values.size(); ++i) z[i] = logit(x.values[i]);
    return z;
}

CouplingFlowMapper::CouplingFlowMapper(uint32_t w, uint32_t h, uint32_t c, uint64_t param_seed)
    : InvertibleMapper(w, h, c) {
    const size_t dim = dimension();
    if (dim < 2) throw ConfigError("coupling flow: dimension must be at least 2");
    const uint32_t half = static_cast<uint32_t>(dim / 2);
    const uint32_t trans = static_cast<uint32_t>(dim) - half;

    // Small tap weights keep the inverse well conditioned, so the latent
    // error induced by 8-bit quantization stays far below group margins.
    Xoshiro256ss rng(param_seed);
    auto uniform = [&](double a) { return (2.0 * rng.uniform01() - 1.0) * a; };

    layers_.resize(kLayers);
    for (uint32_t l = 0; l < kLayers; ++l) {
        Layer& layer = layers_[l];
        layer.perm = random_permutation(rng, static_cast<uint32_t>(dim));
        layer.swap_halves = (l % 2) != 0;
        const uint32_t cond = layer.swap_halves ? trans : half;
        const uint32_t out = static_cast<uint32_t>(dim) - cond;
        layer.taps.resize(out);
        layer.scale_w.resize(out);
        layer.shift_w.resize(out);
        layer.scale_b.resize(out);
        layer.shift_b.resize(out);
        for (uint32_t j = 0; j < out; ++j) {
            for (uint32_t t = 0; t < kTaps; ++t) {
                layer.taps[j][t] = static_cast<uint32_t>(rng.below(cond));
                layer.scale_w[j][t] = uniform(0.01);
                layer.shift_w[j][t] = uniform(0.01);
            }
            layer.scale_b[j] = uniform(0.03);
            layer.shift_b[j] = uniform(0.05);
        }
    }
}

void CouplingFlowMapper::couple_forward(const Layer& layer, std::vector<double>& x) const {
    const size_t dim = x.size();
    std::vector<double> y(dim);
    for (size_t i = 0; i < dim; ++i) y[i] = x[layer.perm[i]];

    const size_t cond = dim - layer.scale_b.size();
    const size_t cond_off = layer.swap_halves ? layer.scale_b.size() : 0;
    const size_t out_off = layer.swap_halves ? 0 : cond;
    for (size_t j = 0; j < layer.scale_b.size(); ++j) {
        double s = layer.scale_b[j];
        double t = layer.shift_b[j];
        for (uint32_t k = 0; k < kTaps; ++k) {
            const double v = y[cond_off + layer.taps[j][k]];
            s += layer.scale_w[j][k] * v;
            t += layer.shift_w[j][k] * v;
        }
        y[out_off + j] = y[out_off + j] * std::exp(clamp_scale(s)) + t;
    }
    x = std::move(y);
}

void CouplingFlowMapper::couple_inverse(const Layer& layer, std::vector<double>& x) const {
    const size_t dim = x.size();
    const size_t cond = dim - layer.scale_b.size();
    const size_t cond_off = layer.swap_halves ? layer.scale_b.size() : 0;
    const size_t out_off = layer.swap_halves ? 0 : cond;
    for (size_t j = 0; j < layer.scale_b.size(); ++j) {
        double s = layer.scale_b[j];
        double t = layer.shift_b[j];
        for (uint32_t k = 0; k < kTaps; ++k) {
            const double v = x[cond_off + layer.taps[j][k]];
            s += layer.scale_w[j][k] * v;
            t += layer.shift_w[j][k] * v;
        }
        x[out_off + j] = (x[out_off + j] - t) * std::exp(-clamp_scale(s));
    }
    std::vector<double> y(dim);
    for (size_t i = 0; i < dim; ++i) y[layer.perm[i]] = x[i];
    x = std::move(y);
}

ContinuousImage CouplingFlowMapper::forward(const LatentVector& z) const {
    check_latent(z);
    std::vector<double> x = z;
    for (const Layer& layer : layers_) couple_forward(layer, x);
    for (double& v : x) v = logistic(v);
    return wrap(std::move(x));
}

LatentVector CouplingFlowMapper::inverse(const ContinuousImage& img) const {
    check_image_dims(img.width, img.height, img.channels, img.values.size());
    std::vector<double> x(img.values.size());
    for (size_t i = 0; i < x.size(); ++i) x[i] = logit(img.values[i]);
    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) couple_inverse(*it, x);
    return x;
}

NoiseChannelMapper::NoiseChannelMapper(uint32_t w, uint32_t h, uint32_t c, double sigma,
                                       uint64_t seed)
    : InvertibleMapper(w, h, c), sigma_(sigma), seed_(seed) {
    if (sigma < 0.0) throw ConfigError("noise mapper: sigma must be >= 0");
}

double NoiseChannelMapper::noise_at(size_t index) const {
    // Counter-mode draw so inverse() stays pure: one mixed word per element.
    const uint64_t x = mix64(seed_ ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    const double u = (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
    return sigma_ * probit(u);
}

ContinuousImage NoiseChannelMapper::forward(const LatentVector& z) const {
    check_latent(z);
    std::vector<double> out(z.size());
    for (size_t i = 0; i < z.size(); ++i) out[i] = logistic(z[i]);
    return wrap(std::move(out));
}

LatentVector NoiseChannelMapper::inverse(const ContinuousImage& x) const {
    check_image_dims(x.width, x.height, x.channels, x.values.size());
    LatentVector z(x.values.size());
    for (size_t i = 0; i < x.values.size(); ++i) z[i] = logit(x.values[i]) + noise_at(i);
    return z;
}

LatentVector NoiseChannelMapper::channel_roundtrip(const LatentVector& z) const {
    LatentVector out = z;
    if (sigma_ == 0.0) return out;
    for (size_t i = 0; i < out.size(); ++i) out[i] += noise_at(i);
    return out;
}

std::unique_ptr<InvertibleMapper> make_mapper(const std::string& name, uint32_t w, uint32_t h,
                                              uint32_t c, uint64_t toy_param_seed) {
    if (name == "toy") return std::make_unique<CouplingFlowMapper>(w, h, c, toy_param_seed);
    if (name == "identity") return std::make_unique<LogisticMapper>(w, h, c);
    if (name.rfind("noise:", 0) == 0) {
        double sigma = 0.0;
        try {
            sigma = std::stod(name.substr(6));
        } catch (const std::exception&) {
            throw ConfigError("mapper: bad noise sigma in '" + name + "'");
        }
        return std::make_unique<NoiseChannelMapper>(w, h, c, sigma, /*seed=*/0xC0FFEE ^ toy_param_seed);
    }
    throw ConfigError("mapper: unknown mapper '" + name + "' (expected toy|identity|noise:SIGMA)");
}

}  // namespace gsteg
