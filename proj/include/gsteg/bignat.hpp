#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace gsteg {

// Arbitrary-precision non-negative integer. GMP supplies the arithmetic;
// every gsteg operation keeps its values >= 0.
using BigNat = mpz_class;

// Exact floor(log2 v) for v >= 1.
inline size_t floor_log2(const BigNat& v) {
    if (v < 1) throw std::domain_error("floor_log2: value must be >= 1");
    return mpz_sizeinbase(v.get_mpz_t(), 2) - 1;
}

}  // namespace gsteg
