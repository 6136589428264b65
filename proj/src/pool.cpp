#include "gsteg/pool.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gsteg/errors.hpp"
#include "gsteg/prng.hpp"

namespace gsteg {

ElementPool sample_pool(const GroupingSpec& spec, uint32_t total, uint64_t seed) {
    const uint32_t K = spec.group_count;
    const uint32_t n = spec.per_group;

    const double in_range = normal_cdf(kLatentHi) - normal_cdf(kLatentLo);
    if (total * in_range / K < 2.0 * n)
        throw ConfigError("sample_pool: expected per-group occupancy below 2n for K=" +
                          std::to_string(K) + ", n=" + std::to_string(n) +
                          ", total=" + std::to_string(total));

    ElementPool pool;
    pool.values.resize(total);
    pool.group_of.resize(total);

    Xoshiro256ss rng(seed);
    std::vector<double> mass(total);  // Phi(value), reused for distances
    for (uint32_t t = 0; t < total; ++t) {
        pool.values[t] = probit(rng.uniform01());
        pool.group_of[t] = assign_group(pool.values[t], spec);
        mass[t] = normal_cdf(pool.values[t]);
    }

    std::vector<std::vector<uint32_t>> members(K);
    for (uint32_t t = 0; t < total; ++t) members[pool.group_of[t]].push_back(t);

    pool.chosen.assign(K, {});
    std::vector<uint8_t> is_chosen(total, 0);
    for (uint32_t g = 0; g < K; ++g) {
        if (members[g].size() < n)
            throw InfeasibleError("sample_pool: group " + std::to_string(g) + " holds only " +
                                      std::to_string(members[g].size()) + " of " +
                                      std::to_string(n) + " required members",
                                  g);
        // Nearest to the group center in probability distance; ties go to
        // the lower sample index. Out-of-range samples sort to the back.
        const double center_mass = normal_cdf(spec.centers[g]);
        auto& m = members[g];
        std::sort(m.begin(), m.end(), [&](uint32_t lhs, uint32_t rhs) {
            double dl = std::fabs(mass[lhs] - center_mass);
            double dr = std::fabs(mass[rhs] - center_mass);
            if (dl != dr) return dl < dr;
            return lhs < rhs;
        });
        pool.chosen[g].assign(m.begin(), m.begin() + n);
        for (uint32_t idx : pool.chosen[g]) is_chosen[idx] = 1;
    }

    pool.leftovers.reserve(total - size_t(K) * n);
    for (uint32_t t = 0; t < total; ++t)
        if (!is_chosen[t]) pool.leftovers.push_back(t);
    return pool;
}

std::vector<std::vector<uint32_t>> regroup_recovered(const std::vector<double>& values,
                                                     const GroupingSpec& spec) {
    const uint32_t K = spec.group_count;
    const uint32_t n = spec.per_group;
    const size_t N = size_t(K) * n;
    if (values.size() != N)
        throw ConfigError("regroup_recovered: expected exactly K*n values");

    std::vector<uint32_t> group(N);
    std::vector<double> mass(N);
    std::vector<size_t> count(K, 0);
    for (size_t p = 0; p < N; ++p) {
        group[p] = assign_group(values[p], spec);
        mass[p] = normal_cdf(values[p]);
        ++count[group[p]];
    }

    // Count repair: route one element at a time from the nearest over-full
    // group toward the lowest deficient one, moving at each hop the member
    // closest (in probability mass) to the boundary being crossed.
    auto move_closest_to_boundary = [&](uint32_t from, int step) {
        const double boundary = spec.boundaries[step > 0 ? from + 1 : from];
        const double boundary_mass = normal_cdf(boundary);
        size_t best = N;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t p = 0; p < N; ++p) {
            if (group[p] != from) continue;
            double d = std::fabs(mass[p] - boundary_mass);
            if (d < best_d) {
                best_d = d;
                best = p;
            }
        }
        if (best == N) throw IntegrityError("regroup_recovered: repair found an empty group");
        group[best] = static_cast<uint32_t>(int(from) + step);
    };

    while (true) {
        uint32_t deficient = K;
        for (uint32_t g = 0; g < K; ++g) {
            if (count[g] < n) {
                deficient = g;
                break;
            }
        }
        if (deficient == K) break;

        uint32_t donor = K;
        uint32_t best_dist = std::numeric_limits<uint32_t>::max();
        for (uint32_t g = 0; g < K; ++g) {
            if (count[g] <= n) continue;
            uint32_t dist = g > deficient ? g - deficient : deficient - g;
            if (dist < best_dist) {
                best_dist = dist;
                donor = g;
            }
        }
        if (donor == K) throw IntegrityError("regroup_recovered: no donor group for repair");

        const int step = donor < deficient ? 1 : -1;
        for (uint32_t cur = donor; cur != deficient; cur = uint32_t(int(cur) + step))
            move_closest_to_boundary(cur, step);
        --count[donor];
        ++count[deficient];
    }

    std::vector<std::vector<uint32_t>> positions(K);
    for (uint32_t g = 0; g < K; ++g) positions[g].reserve(n);
    for (size_t p = 0; p < N; ++p) positions[group[p]].push_back(static_cast<uint32_t>(p));
    return positions;
}

}  // namespace gsteg
