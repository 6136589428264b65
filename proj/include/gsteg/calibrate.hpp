#pragma once

#include <cstdint>
#include <string>

#include "gsteg/codec.hpp"
#include "gsteg/mapper.hpp"

namespace gsteg {

// Measured channel behaviour for one (mapper, params) configuration.
// epsilon_star is the largest latent error seen at arranged positions;
// min_margin is the smallest value-space distance from a chosen element to
// a boundary that would change its group. safe = epsilon_star < min_margin.
struct CalibrationReport {
    double epsilon_star = 0.0;
    double min_margin = 0.0;
    bool safe = false;
    double survival = 1.0;  // fraction of arranged elements whose group held
    int trials = 0;

    std::string to_kv() const;
};

// Runs `trials` full hide-side constructions (seeded messages and pools)
// through the mapper's channel and measures the recovered latent error of
// every arranged element.
CalibrationReport calibrate(const InvertibleMapper& mapper, const StegParams& params,
                            uint64_t seed, int trials = 100);

}  // namespace gsteg
