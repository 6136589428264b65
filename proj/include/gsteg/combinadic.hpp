#pragma once

#include <cstdint>
#include <vector>

#include "gsteg/bignat.hpp"

namespace gsteg {

// A k-subset of {0, ..., universe_size-1}; indices strictly increasing.
struct Combination {
    std::vector<uint32_t> indices;
    uint32_t universe_size = 0;
};

// Exact C(n, k). k > n is a domain error.
BigNat binomial(uint64_t n, uint64_t k);

// floor(log2 omega): the number of message bits a choice among `omega`
// alternatives can carry. omega must be >= 1.
size_t bit_budget(const BigNat& omega);

// Combinadic (colexicographic) unranking: the unique ascending index set
// {c_1 < ... < c_k} with m = sum over t of C(c_t, t). Requires
// m < C(universe_size, k).
Combination comb_unrank(const BigNat& m, uint32_t universe_size, uint32_t k);

// Exact inverse of comb_unrank. The combination must be strictly ascending,
// of size k, with every index below universe_size.
BigNat comb_rank(const Combination& c, uint32_t k);

}  // namespace gsteg
