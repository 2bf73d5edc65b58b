#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace als {

// Exact non-negative integer arithmetic. Binomials and codeword ranks grow
// far past 64 bits, so everything counting-related runs on this type.
using Natural = boost::multiprecision::cpp_int;

inline size_t bit_length(const Natural& v) {
    return v.is_zero() ? 0 : boost::multiprecision::msb(v) + 1;
}

// ceil(lg v) for v >= 1.
inline size_t ceil_log2(const Natural& v) {
    Natural t = v - 1;
    return bit_length(t);
}

inline size_t ceil_log2_u64(uint64_t n) {
    if (n <= 1) return 0;
    size_t b = 0;
    uint64_t x = n - 1;
    while (x) {
        ++b;
        x >>= 1;
    }
    return b;
}

}  // namespace als
