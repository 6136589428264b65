#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gsteg/bits.hpp"
#include "gsteg/mapper.hpp"
#include "gsteg/pool.hpp"
#include "gsteg/prng.hpp"

namespace gsteg {

// s2irt: each group's n positions are one joint choice among all remaining
// positions (maximal capacity). se: every element picks one slot inside its
// own block of adjacent positions (bounded error propagation).
enum class Scheme { S2IRT, SE };

std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view name);  // "s2irt" | "se"

struct StegParams {
    Scheme scheme = Scheme::S2IRT;
    uint32_t group_count = 0;  // K
    uint32_t per_group = 0;    // n
    uint32_t latent_dim = 0;   // N_T
    Key256 key;

    uint32_t arranged_count() const { return group_count * per_group; }  // N

    // K >= 2, n >= 1, K*n <= N_T. Enough for capacity analysis.
    void validate_structure() const;
};

// Group number (1-based) for each of the first N = K*n positions.
struct PositionArrangement {
    std::vector<uint32_t> group_at;

    size_t size() const { return group_at.size(); }
    // Sorted 0-based positions held by 1-based group g.
    std::vector<uint32_t> positions_of(uint32_t g) const;
};

// Exact arrangement capacity in bits:
//   s2irt: sum over i of floor(log2 C(N-(i-1)n, n)),  i = 1..K-1
//   se:    sum over i of n * floor(log2 (K-i+1)),     i = 1..K-1
size_t capacity_bits(const StegParams& params);

inline constexpr size_t kHeaderBits = 32;

// Exact-capacity framing: 32-bit big-endian payload bit-length, payload,
// keyed-PRNG padding. Oversize (or capacity below the header) raises a
// capacity error carrying both sizes.
BitString frame_message(const BitString& payload, const StegParams& params);

struct DeframeResult {
    BitString payload;
    bool integrity_ok = true;
};

// Splits a framed stream back into its payload. A declared length beyond
// capacity marks the result corrupted and returns the best-effort payload.
DeframeResult deframe_message(const BitString& framed, const StegParams& params);

PositionArrangement arrange_s2irt(const BitString& framed, const StegParams& params);
PositionArrangement arrange_se(const BitString& framed, const StegParams& params);
PositionArrangement arrange(const BitString& framed, const StegParams& params);

// Inverse of arrange: the framed stream an arrangement encodes. Total for
// any arrangement; choice numbers beyond a group's bit budget clamp to the
// top of that budget (only reachable on attacked inputs).
BitString arrangement_bits(const PositionArrangement& arr, const StegParams& params);

// Values of group arr[p] fill positions in ascending position order,
// nearest-to-center values first; unchosen samples fill the tail in
// keyed-PRNG order.
LatentVector build_vector(const PositionArrangement& arr, const ElementPool& pool,
                          const StegParams& params);

// Keyed Fisher-Yates permutation over all N_T entries; unscramble applies
// the exact inverse permutation.
LatentVector scramble(const LatentVector& z, const Key256& key);
LatentVector unscramble(const LatentVector& z, const Key256& key);

// frame -> arrange -> build_vector -> scramble -> forward -> quantize.
// Deterministic given (message, params, seed).
QuantizedImage hide(const BitString& message, const StegParams& params,
                    const InvertibleMapper& mapper, uint64_t seed);

struct ExtractResult {
    BitString payload;
    bool integrity_ok = true;
};

// inverse -> unscramble -> regroup -> per-scheme choice decoding -> deframe.
ExtractResult extract(const QuantizedImage& image, const StegParams& params,
                      const InvertibleMapper& mapper);

}  // namespace gsteg
