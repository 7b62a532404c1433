#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mexpart/errors.hpp"

namespace mexpart {

// Exact coefficients are overflow-checked 128-bit integers: wide enough for
// every series this library builds (partition numbers fit up to n ~ 1200),
// and any overflow aborts the run instead of wrapping.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int128 addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int128 subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int128 multiplication overflow");
    return r;
}

inline int128 checked_pow(int128 base, std::uint64_t e) {
    int128 result = 1;
    while (e > 0) {
        if (e & 1) result = checked_mul(result, base);
        e >>= 1;
        if (e > 0) base = checked_mul(base, base);
    }
    return result;
}

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

std::string dec_string(int128 v);
int128 parse_int128(std::string_view s);

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace mexpart
