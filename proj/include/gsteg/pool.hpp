#pragma once

#include <cstdint>
#include <vector>

#include "gsteg/grouping.hpp"

namespace gsteg {

// A seeded draw of `total` standard-normal samples together with their group
// memberships, the n nearest-to-center choices per group (nearest first),
// and the unchosen remainder.
struct ElementPool {
    std::vector<double> values;                 // size N_T
    std::vector<uint32_t> group_of;             // per sample, boundary-clamped
    std::vector<std::vector<uint32_t>> chosen;  // per group, nearest-to-center order
    std::vector<uint32_t> leftovers;            // ascending unchosen sample indices
};

// Deterministic given the seed. Requires the expected in-range occupancy per
// group, total * (Phi(2) - Phi(-2)) / K, to be at least 2n; throws a
// group-naming infeasibility error if a sampled group still comes up short.
ElementPool sample_pool(const GroupingSpec& spec, uint32_t total, uint64_t seed);

// Group the first K*n recovered values by assign_group, then repair the
// counts to exactly n per group by walking boundary-nearest values (in
// probability distance) from over-full groups toward deficient ones.
// Returns per-group sorted lists of the 0-based positions each group holds.
std::vector<std::vector<uint32_t>> regroup_recovered(const std::vector<double>& values,
                                                     const GroupingSpec& spec);

}  // namespace gsteg
