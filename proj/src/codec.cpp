#include "gsteg/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gsteg/combinadic.hpp"
#include "gsteg/errors.hpp"

namespace gsteg {

namespace {

constexpr uint64_t kTagScramble = pack_tag("SCRAMBLE");
constexpr uint64_t kTagPadding = pack_tag("PADBITS1");
constexpr uint64_t kTagLeftover = pack_tag("LEFTOVER");

// MSB-first bit stream over 64-bit PRNG words.
class BitDrain {
public:
    explicit BitDrain(Xoshiro256ss rng) : rng_(rng) {}
    bool next() {
        if (remaining_ == 0) {
            word_ = rng_.next();
            remaining_ = 64;
        }
        bool b = (word_ >> 63) != 0;
        word_ <<= 1;
        --remaining_;
        return b;
    }

private:
    Xoshiro256ss rng_;
    uint64_t word_ = 0;
    int remaining_ = 0;
};

std::vector<uint32_t> iota_positions(uint32_t n) {
    std::vector<uint32_t> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
    return scheme == Scheme::S2IRT ? "s2irt" : "se";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "s2irt") return Scheme::S2IRT;
    if (name == "se") return Scheme::SE;
    throw ConfigError("scheme must be 's2irt' or 'se'");
}

void StegParams::validate_structure() const {
    if (group_count < 2) throw ConfigError("params: K must be >= 2");
    if (per_group < 1) throw ConfigError("params: n must be >= 1");
    if (uint64_t(group_count) * per_group > latent_dim)
        throw ConfigError("params: K*n exceeds the latent dimension");
}

std::vector<uint32_t> PositionArrangement::positions_of(uint32_t g) const {
    std::vector<uint32_t> out;
    for (uint32_t p = 0; p < group_at.size(); ++p)
        if (group_at[p] == g) out.push_back(p);
    return out;
}

size_t capacity_bits(const StegParams& params) {
    params.validate_structure();
    const uint32_t K = params.group_count;
    const uint32_t n = params.per_group;
    size_t total = 0;
    if (params.scheme == Scheme::S2IRT) {
        const uint64_t N = uint64_t(K) * n;
        for (uint32_t i = 1; i <= K - 1; ++i) {
            const uint64_t r = N - uint64_t(i - 1) * n;
            total += bit_budget(binomial(r, n));
        }
    } else {
        for (uint32_t i = 1; i <= K - 1; ++i)
            total += size_t(n) * floor_log2(BigNat(K - i + 1));
    }
    return total;
}

BitString frame_message(const BitString& payload, const StegParams& params) {
    const size_t cap = capacity_bits(params);
    const size_t usable = cap >= kHeaderBits ? cap - kHeaderBits : 0;
    if (cap < kHeaderBits || payload.size() > usable)
        throw CapacityError(payload.size(), usable);

    BitString framed = int_to_bits(BigNat(static_cast<unsigned long>(payload.size())), kHeaderBits);
    framed.append(payload);
    BitDrain pad(Xoshiro256ss(params.key, kTagPadding));
    while (framed.size() < cap) framed.push_back(pad.next());
    return framed;
}

DeframeResult deframe_message(const BitString& framed, const StegParams& params) {
    const size_t cap = capacity_bits(params);
    if (framed.size() != cap)
        throw ConfigError("deframe: stream length does not match capacity");
    const size_t usable = cap - kHeaderBits;
    const BigNat declared = read_bits_as_int(framed, 0, kHeaderBits);
    DeframeResult out;
    if (declared > usable) {
        out.integrity_ok = false;
        out.payload = framed.slice(kHeaderBits, usable);
    } else {
        out.payload = framed.slice(kHeaderBits, declared.get_ui());
    }
    return out;
}

PositionArrangement arrange_s2irt(const BitString& framed, const StegParams& params) {
    const size_t cap = capacity_bits(params);
    if (framed.size() != cap)
        throw ConfigError("arrange: message must be framed to exact capacity");
    const uint32_t K = params.group_count;
    const uint32_t n = params.per_group;
    const uint32_t N = params.arranged_count();

    PositionArrangement arr;
    arr.group_at.assign(N, K);  // whatever survives belongs to the last group
    std::vector<uint32_t> remain = iota_positions(N);
    size_t offset = 0;
    for (uint32_t i = 1; i <= K - 1; ++i) {
        const uint32_t r = static_cast<uint32_t>(remain.size());
        const size_t budget = bit_budget(binomial(r, n));
        const BigNat m = read_bits_as_int(framed, offset, budget);
        offset += budget;
        const Combination sel = comb_unrank(m, r, n);
        for (uint32_t idx : sel.indices) arr.group_at[remain[idx]] = i;
        std::vector<uint32_t> next;
        next.reserve(remain.size() - n);
        size_t s = 0;
        for (uint32_t idx = 0; idx < remain.size(); ++idx) {
            if (s < sel.indices.size() && sel.indices[s] == idx) {
                ++s;
                continue;
            }
            next.push_back(remain[idx]);
        }
        remain = std::move(next);
    }
    return arr;
}

PositionArrangement arrange_se(const BitString& framed, const StegParams& params) {
    const size_t cap = capacity_bits(params);
    if (framed.size() != cap)
        throw ConfigError("arrange: message must be framed to exact capacity");
    const uint32_t K = params.group_count;
    const uint32_t n = params.per_group;
    const uint32_t N = params.arranged_count();

    PositionArrangement arr;
    arr.group_at.assign(N, K);
    std::vector<uint32_t> remain = iota_positions(N);
    size_t offset = 0;
    for (uint32_t i = 1; i <= K - 1; ++i) {
        const uint32_t block = K - i + 1;
        const size_t budget = floor_log2(BigNat(block));
        std::vector<uint32_t> selected(n);
        for (uint32_t j = 0; j < n; ++j) {
            const BigNat m = read_bits_as_int(framed, offset, budget);
            offset += budget;
            const uint32_t slot = static_cast<uint32_t>(m.get_ui());
            selected[j] = j * block + slot;  // index into remain
            arr.group_at[remain[selected[j]]] = i;
        }
        std::vector<uint32_t> next;
        next.reserve(remain.size() - n);
        size_t s = 0;
        for (uint32_t idx = 0; idx < remain.size(); ++idx) {
            if (s < selected.size() && selected[s] == idx) {
                ++s;
                continue;
            }
            next.push_back(remain[idx]);
        }
        remain = std::move(next);
    }
    return arr;
}

PositionArrangement arrange(const BitString& framed, const StegParams& params) {
    return params.scheme == Scheme::S2IRT ? arrange_s2irt(framed, params)
                                          : arrange_se(framed, params);
}

namespace {

BitString arrangement_bits_s2irt(const PositionArrangement& arr, const StegParams& params) {
    const uint32_t K = params.group_count;
    const uint32_t n = params.per_group;
    const uint32_t N = params.arranged_count();

    std::vector<std::vector<uint32_t>> group_positions(K + 1);
    for (uint32_t p = 0; p < N; ++p) {
        const uint32_t g = arr.group_at[p];
        if (g >= 1 && g <= K) group_positions[g].push_back(p);
    }

    BitString out;
    std::vector<uint32_t> remain = iota_positions(N);
    std::vector<uint8_t> in_remain(N, 1);
    for (uint32_t i = 1; i <= K - 1; ++i) {
        const uint32_t r = static_cast<uint32_t>(remain.size());
        const size_t budget = bit_budget(binomial(r, n));

        // Positions this group claims, restricted to still-remaining ones;
        // trim or pad deterministically so decoding stays total after an
        // attack has distorted the counts.
        std::vector<uint32_t> claimed;
        for (uint32_t p : group_positions[i])
            if (in_remain[p]) claimed.push_back(p);
        if (claimed.size() > n) claimed.resize(n);
        if (claimed.size() < n) {
            for (uint32_t p : remain) {
                if (claimed.size() == n) break;
                if (std::find(claimed.begin(), claimed.end(), p) == claimed.end())
                    claimed.push_back(p);
            }
            std::sort(claimed.begin(), claimed.end());
        }

        Combination comb;
        comb.universe_size = r;
        comb.indices.reserve(n);
        size_t ci = 0;
        for (uint32_t idx = 0; idx < remain.size(); ++idx) {
            if (ci < claimed.size() && remain[idx] == claimed[ci]) {
                comb.indices.push_back(idx);
                ++ci;
            }
        }
        BigNat m = comb_rank(comb, n);
        const BigNat top = (BigNat(1) << budget) - 1;
        if (m > top) m = top;  // beyond the encoder's bit budget: clamp
        out.append(int_to_bits(m, budget));

        std::vector<uint32_t> next;
        next.reserve(remain.size() - n);
        for (uint32_t p : remain)
            if (std::find(claimed.begin(), claimed.end(), p) == claimed.end()) next.push_back(p);
        for (uint32_t p : claimed) in_remain[p] = 0;
        remain = std::move(next);
    }
    return out;
}

// The se blocks at every level are nested inside the same n static columns
// of K consecutive positions, so decoding runs per column: damage from a
// corrupted element can never leave its column.
BitString arrangement_bits_se(const PositionArrangement& arr, const StegParams& params) {
    const uint32_t K = params.group_count;
    const uint32_t n = params.per_group;

    // slot choice per level i (1..K-1) and column j
    std::vector<std::vector<uint32_t>> slot(K, std::vector<uint32_t>(n, 0));
    for (uint32_t j = 0; j < n; ++j) {
        std::vector<uint32_t> local;  // positions of column j still unclaimed
        local.reserve(K);
        for (uint32_t q = 0; q < K; ++q) local.push_back(j * K + q);
        for (uint32_t i = 1; i <= K - 1; ++i) {
            uint32_t found = static_cast<uint32_t>(local.size());
            for (uint32_t idx = 0; idx < local.size(); ++idx) {
                if (arr.group_at[local[idx]] == i) {
                    found = idx;
                    break;
                }
            }
            const uint32_t pick = found < local.size() ? found : 0;
            slot[i - 1][j] = pick;
            local.erase(local.begin() + pick);
        }
    }

    BitString out;
    for (uint32_t i = 1; i <= K - 1; ++i) {
        const uint32_t block = K - i + 1;
        const size_t budget = floor_log2(BigNat(block));
        const uint32_t top = (1u << budget) - 1;
        for (uint32_t j = 0; j < n; ++j) {
            const uint32_t clamped = std::min(slot[i - 1][j], top);
            out.append(int_to_bits(BigNat(clamped), budget));
        }
    }
    return out;
}

}  // namespace

BitString arrangement_bits(const PositionArrangement& arr, const StegParams& params) {
    params.validate_structure();
    if (arr.size() != params.arranged_count())
        throw ConfigError("arrangement_bits: arrangement size mismatch");
    return params.scheme == Scheme::S2IRT ? arrangement_bits_s2irt(arr, params)
                                          : arrangement_bits_se(arr, params);
}

LatentVector build_vector(const PositionArrangement& arr, const ElementPool& pool,
                          const StegParams& params) {
    const uint32_t K = params.group_count;
    const uint32_t n = params.per_group;
    const uint32_t N = params.arranged_count();
    if (arr.size() != N || pool.values.size() != params.latent_dim)
        throw ConfigError("build_vector: arrangement or pool inconsistent with params");

    LatentVector z(params.latent_dim, 0.0);
    std::vector<uint32_t> used(K + 1, 0);
    for (uint32_t p = 0; p < N; ++p) {
        const uint32_t g = arr.group_at[p];
        if (g < 1 || g > K || used[g] >= n)
            throw std::logic_error("build_vector: group exhausted; arrangement invariant broken");
        z[p] = pool.values[pool.chosen[g - 1][used[g]++]];
    }

    Xoshiro256ss rng(params.key, kTagLeftover);
    const auto perm = random_permutation(rng, static_cast<uint32_t>(pool.leftovers.size()));
    for (size_t k = 0; k < pool.leftovers.size(); ++k)
        z[N + k] = pool.values[pool.leftovers[perm[k]]];
    return z;
}

LatentVector scramble(const LatentVector& z, const Key256& key) {
    Xoshiro256ss rng(key, kTagScramble);
    const auto perm = random_permutation(rng, static_cast<uint32_t>(z.size()));
    LatentVector out(z.size());
    for (size_t i = 0; i < z.size(); ++i) out[i] = z[perm[i]];
    return out;
}

LatentVector unscramble(const LatentVector& z, const Key256& key) {
    Xoshiro256ss rng(key, kTagScramble);
    const auto perm = random_permutation(rng, static_cast<uint32_t>(z.size()));
    LatentVector out(z.size());
    for (size_t i = 0; i < z.size(); ++i) out[perm[i]] = z[i];
    return out;
}

QuantizedImage hide(const BitString& message, const StegParams& params,
                    const InvertibleMapper& mapper, uint64_t seed) {
    params.validate_structure();
    if (mapper.dimension() != params.latent_dim)
        throw ConfigError("hide: mapper dimension does not match params.latent_dim");

    const BitString framed = frame_message(message, params);
    const PositionArrangement arr = arrange(framed, params);
    const GroupingSpec spec = build_grouping(params.group_count, params.per_group);
    const ElementPool pool = sample_pool(spec, params.latent_dim, seed);
    const LatentVector z = build_vector(arr, pool, params);
    return quantize(mapper.forward(scramble(z, params.key)));
}

ExtractResult extract(const QuantizedImage& image, const StegParams& params,
                      const InvertibleMapper& mapper) {
    params.validate_structure();
    if (image.size() != params.latent_dim)
        throw ConfigError("extract: image dimensions do not match params.latent_dim");

    const LatentVector recovered = unscramble(mapper.inverse(dequantize(image)), params.key);
    const GroupingSpec spec = build_grouping(params.group_count, params.per_group);
    const uint32_t N = params.arranged_count();
    const std::vector<double> head(recovered.begin(), recovered.begin() + N);
    const auto positions = regroup_recovered(head, spec);

    PositionArrangement arr;
    arr.group_at.assign(N, 0);
    for (uint32_t g = 0; g < params.group_count; ++g)
        for (uint32_t p : positions[g]) arr.group_at[p] = g + 1;

    const BitString framed = arrangement_bits(arr, params);
    const DeframeResult res = deframe_message(framed, params);
    return ExtractResult{res.payload, res.integrity_ok};
}

}  // namespace gsteg
