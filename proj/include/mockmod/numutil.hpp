#pragma once

#include <cstdint>

namespace mockmod {

// Floor/ceil division for possibly-negative numerators (b > 0).
// C++ integer division truncates toward zero, which is the wrong
// rounding for window arithmetic on Laurent exponents.
inline long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

inline long ceil_div(long a, long b) {
    return -floor_div(-a, b);
}

// Small integer power, no overflow checking (caller guarantees range).
inline long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

} // namespace mockmod
