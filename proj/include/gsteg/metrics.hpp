#pragma once

#include <cstdint>
#include <string>

#include "gsteg/bits.hpp"
#include "gsteg/codec.hpp"

namespace gsteg {

// Hidden bits per image pixel per channel.
double bpp(uint64_t total_bits, uint32_t width, uint32_t height, uint32_t channels);

// Levenshtein distance over bit symbols (Myers' bit-parallel algorithm).
// Streams longer than 10^6 bits are rejected with a size error.
size_t levenshtein(const BitString& a, const BitString& b);

// 1 - ED(a, b) / max(len(a), len(b)); two empty streams compare as 1.
double ie_accuracy(const BitString& a, const BitString& b);

// Exact and estimated arrangement capacity for one parameter set.
//   exact_bits         sum of floored per-group budgets (big-integer exact)
//   sum_log2_omega     sum of log2 of the exact choice counts
//   stirling_estimate  closed-form Stirling approximation of that sum
//   lower_slack        the floor loss bound: K-1 (s2irt) or n*(K-1) (se),
//                      giving sum - lower_slack < exact <= sum
struct CapacityReport {
    Scheme scheme = Scheme::S2IRT;
    uint32_t group_count = 0;
    uint32_t per_group = 0;
    uint32_t latent_dim = 0;
    uint64_t exact_bits = 0;
    double sum_log2_omega = 0.0;
    double stirling_estimate = 0.0;
    double lower_slack = 0.0;
    double bits_per_pixel = 0.0;

    std::string to_kv() const;
};

CapacityReport capacity_report(const StegParams& params);

// Chance that a key-less attacker guesses the whole arrangement:
// 1 / prod(choice counts), reported as mantissa * 10^exponent10 with the
// mantissa in [0.1, 1).
struct CrackProbability {
    double mantissa = 0.0;
    int64_t exponent10 = 0;

    std::string to_string() const;
};

CrackProbability crack_probability(const StegParams& params);

}  // namespace gsteg
