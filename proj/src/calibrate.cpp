#include "gsteg/calibrate.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gsteg/errors.hpp"

namespace gsteg {

namespace {

// Distance to the nearest boundary whose crossing changes the group. The
// outer edges of the end groups never change membership (assign_group
// clamps), so only interior boundaries count.
double group_margin(double v, uint32_t g, const GroupingSpec& spec) {
    double margin = std::numeric_limits<double>::infinity();
    if (g > 0) margin = std::min(margin, v - spec.boundaries[g]);
    if (g + 1 < spec.group_count) margin = std::min(margin, spec.boundaries[g + 1] - v);
    return margin;
}

}  // namespace

std::string CalibrationReport::to_kv() const {
    std::ostringstream os;
    os.precision(12);
    os << "epsilon_star=" << epsilon_star << "\n"
       << "min_margin=" << min_margin << "\n"
       << "safe=" << (safe ? 1 : 0) << "\n"
       << "survival=" << survival << "\n"
       << "trials=" << trials << "\n";
    return os.str();
}

CalibrationReport calibrate(const InvertibleMapper& mapper, const StegParams& params,
                            uint64_t seed, int trials) {
    params.validate_structure();
    if (mapper.dimension() != params.latent_dim)
        throw ConfigError("calibrate: mapper dimension does not match params");

    const GroupingSpec spec = build_grouping(params.group_count, params.per_group);
    const uint32_t N = params.arranged_count();
    const size_t cap = capacity_bits(params);

    CalibrationReport report;
    report.trials = trials;
    report.min_margin = std::numeric_limits<double>::infinity();

    Xoshiro256ss message_rng(mix64(seed) ^ pack_tag("CALMSGS1"));
    size_t held = 0, observed = 0;
    for (int t = 0; t < trials; ++t) {
        BitString framed(cap);
        for (size_t i = 0; i < cap; ++i) framed.set_bit(i, message_rng.below(2) != 0);

        const PositionArrangement arr = arrange(framed, params);
        const ElementPool pool = sample_pool(spec, params.latent_dim, seed + t);
        const LatentVector z = build_vector(arr, pool, params);
        const LatentVector back = unscramble(mapper.channel_roundtrip(scramble(z, params.key)),
                                             params.key);

        for (uint32_t p = 0; p < N; ++p) {
            const double err = std::fabs(back[p] - z[p]);
            report.epsilon_star = std::max(report.epsilon_star, err);
            const uint32_t g = assign_group(z[p], spec);
            report.min_margin = std::min(report.min_margin, group_margin(z[p], g, spec));
            ++observed;
            if (assign_group(back[p], spec) == g) ++held;
        }
    }

    report.safe = report.epsilon_star < report.min_margin;
    report.survival = observed ? double(held) / double(observed) : 1.0;
    return report;
}

}  // namespace gsteg
