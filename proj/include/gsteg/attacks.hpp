#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gsteg/mapper.hpp"

namespace gsteg {

enum class AttackKind {
    IntensityChange,       // s' = clamp(round(s * (1+p))),       p in [-0.5, 0.5]
    ContrastEnhancement,   // s' = clamp(round(128 + (s-128)(1+p))), p in [-1, 1]
    SaltPepper,            // fraction f of samples forced to 0 or 255, f in [0, 1]
    GaussianNoise,         // s' = clamp(round(s + 255 e)), e ~ N(0, sigma^2), sigma in [0, 1]
};

struct AttackSpec {
    AttackKind kind = AttackKind::IntensityChange;
    double magnitude = 0.0;
    uint64_t seed = 0;  // used by the stochastic kinds

    // "intensity-change:0.02", "salt-pepper:0.03:7", ...
    static AttackSpec parse(std::string_view text);
    void validate() const;
};

std::string_view attack_kind_name(AttackKind kind);

QuantizedImage apply(const QuantizedImage& img, const AttackSpec& spec);

}  // namespace gsteg
