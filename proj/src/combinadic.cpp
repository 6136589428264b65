#include "gsteg/combinadic.hpp"

#include <stdexcept>

namespace gsteg {

BigNat binomial(uint64_t n, uint64_t k) {
    if (k > n) throw std::domain_error("binomial: k > n");
    BigNat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

size_t bit_budget(const BigNat& omega) {
    if (omega < 1) throw std::domain_error("bit_budget: omega must be >= 1");
    return floor_log2(omega);
}

Combination comb_unrank(const BigNat& m, uint32_t universe_size, uint32_t k) {
    if (m < 0 || m >= binomial(universe_size, k))
        throw std::out_of_range("comb_unrank: rank out of range");

    Combination out;
    out.universe_size = universe_size;
    out.indices.assign(k, 0);
    if (k == 0) return out;

    // Walk the candidate index c downward keeping v = C(c, t); the largest
    // c with C(c, t) <= r is the t-th (largest) member. The multiplicative
    // updates keep every step an exact small-factor mul/div.
    BigNat r = m;
    uint32_t c = universe_size - 1;
    BigNat v = binomial(c, k);  // C(c, k); zero when k > c
    for (uint32_t t = k; t >= 1; --t) {
        while (v > r) {
            // C(c-1, t) = C(c, t) * (c-t) / c
            v *= c - t;
            v /= c;
            --c;
        }
        out.indices[t - 1] = c;
        r -= v;
        if (t > 1) {
            // C(c-1, t-1) = C(c, t) * t / c
            v *= t;
            v /= c;
            --c;
        }
    }
    return out;
}

BigNat comb_rank(const Combination& c, uint32_t k) {
    if (c.indices.size() != k) throw std::domain_error("comb_rank: wrong combination size");
    for (size_t t = 0; t < c.indices.size(); ++t) {
        if (c.indices[t] >= c.universe_size)
            throw std::domain_error("comb_rank: index out of universe");
        if (t > 0 && c.indices[t] <= c.indices[t - 1])
            throw std::domain_error("comb_rank: indices must be strictly increasing");
    }
    BigNat rank = 0;
    for (uint32_t t = 1; t <= k; ++t) {
        uint32_t idx = c.indices[t - 1];
        if (idx >= t) rank += binomial(idx, t);  // C(idx, t) = 0 otherwise
    }
    return rank;
}

}  // namespace gsteg
