#include "gsteg/attacks.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "gsteg/errors.hpp"
#include "gsteg/grouping.hpp"
#include "gsteg/prng.hpp"

namespace gsteg {

namespace {

uint8_t clamp_sample(double s) {
    return static_cast<uint8_t>(std::clamp(std::floor(s + 0.5), 0.0, 255.0));
}

AttackKind parse_kind(std::string_view name) {
    if (name == "intensity-change") return AttackKind::IntensityChange;
    if (name == "contrast-enhancement") return AttackKind::ContrastEnhancement;
    if (name == "salt-pepper") return AttackKind::SaltPepper;
    if (name == "gaussian-noise") return AttackKind::GaussianNoise;
    throw ConfigError("attack: unknown kind '" + std::string(name) + "'");
}

}  // namespace

std::string_view attack_kind_name(AttackKind kind) {
    switch (kind) {
        case AttackKind::IntensityChange: return "intensity-change";
        case AttackKind::ContrastEnhancement: return "contrast-enhancement";
        case AttackKind::SaltPepper: return "salt-pepper";
        case AttackKind::GaussianNoise: return "gaussian-noise";
    }
    return "?";
}

AttackSpec AttackSpec::parse(std::string_view text) {
    AttackSpec spec;
    const size_t c1 = text.find(':');
    if (c1 == std::string_view::npos)
        throw ConfigError("attack: expected KIND:MAGNITUDE[:SEED]");
    spec.kind = parse_kind(text.substr(0, c1));
    std::string rest(text.substr(c1 + 1));
    const size_t c2 = rest.find(':');
    try {
        if (c2 == std::string::npos) {
            spec.magnitude = std::stod(rest);
        } else {
            spec.magnitude = std::stod(rest.substr(0, c2));
            spec.seed = std::stoull(rest.substr(c2 + 1));
        }
    } catch (const std::exception&) {
        throw ConfigError("attack: bad magnitude or seed in '" + std::string(text) + "'");
    }
    spec.validate();
    return spec;
}

void AttackSpec::validate() const {
    const double m = magnitude;
    switch (kind) {
        case AttackKind::IntensityChange:
            if (m < -0.5 || m > 0.5) throw ConfigError("intensity-change magnitude outside [-0.5, 0.5]");
            break;
        case AttackKind::ContrastEnhancement:
            if (m < -1.0 || m > 1.0) throw ConfigError("contrast-enhancement magnitude outside [-1, 1]");
            break;
        case AttackKind::SaltPepper:
            if (m < 0.0 || m > 1.0) throw ConfigError("salt-pepper fraction outside [0, 1]");
            break;
        case AttackKind::GaussianNoise:
            if (m < 0.0 || m > 1.0) throw ConfigError("gaussian-noise sigma outside [0, 1]");
            break;
    }
}

QuantizedImage apply(const QuantizedImage& img, const AttackSpec& spec) {
    spec.validate();
    QuantizedImage out = img;
    switch (spec.kind) {
        case AttackKind::IntensityChange:
            for (auto& s : out.samples) s = clamp_sample(double(s) * (1.0 + spec.magnitude));
            break;
        case AttackKind::ContrastEnhancement:
            for (auto& s : out.samples)
                s = clamp_sample(128.0 + (double(s) - 128.0) * (1.0 + spec.magnitude));
            break;
        case AttackKind::SaltPepper: {
            Xoshiro256ss rng(spec.seed);
            for (auto& s : out.samples)
                if (rng.uniform01() < spec.magnitude) s = rng.below(2) ? 255 : 0;
            break;
        }
        case AttackKind::GaussianNoise: {
            Xoshiro256ss rng(spec.seed);
            for (auto& s : out.samples) {
                const double e = spec.magnitude * probit(rng.uniform01());
                s = clamp_sample(double(s) + 255.0 * e);
            }
            break;
        }
    }
    return out;
}

}  // namespace gsteg
