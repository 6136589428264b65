#pragma once

#include <cstdint>
#include <vector>

namespace gsteg {

inline constexpr double kLatentLo = -2.0;
inline constexpr double kLatentHi = 2.0;

// Inverse standard normal CDF, absolute error well below 1e-9. p in (0,1).
double probit(double p);

// Standard normal CDF.
double normal_cdf(double x);

// Equal-probability partition of [-2, 2] into K parts. boundaries has K+1
// ascending entries with boundaries[0] = -2 and boundaries[K] = +2; each
// center sits at the probability midpoint of its part. Interior boundaries
// are lower-inclusive.
struct GroupingSpec {
    uint32_t group_count = 0;  // K
    uint32_t per_group = 0;    // n
    std::vector<double> boundaries;
    std::vector<double> centers;
};

GroupingSpec build_grouping(uint32_t K, uint32_t n);

// Total over all reals: v below -2 falls in group 0, v at or above +2 in
// group K-1.
uint32_t assign_group(double v, const GroupingSpec& spec);

}  // namespace gsteg
