#pragma once

#include <string>

#include "mexpart/int128.hpp"

namespace mexpart {

// Exact rational with checked 128-bit numerator/denominator. Cusp orders and
// holomorphy margins need exact sign decisions at values like 5/4 or 5/12,
// so floating point is never used here.
struct Rational {
    int128 num = 0;
    int128 den = 1;  // always > 0, gcd(num, den) == 1

    Rational() = default;
    Rational(int128 n) : num(n), den(1) {}
    Rational(int128 n, int128 d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) {
            n = checked_sub(0, n);
            d = checked_sub(0, d);
        }
        int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = n;
        den = d;
    }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    bool is_integer() const { return den == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw Error("rational division by zero");
        return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        std::string s = dec_string(num);
        if (den != 1) s += "/" + dec_string(den);
        return s;
    }
};

// 2^e for possibly negative e; the cusp table rows need 2^{7+alpha-2r} with
// the exponent dipping below zero.
inline Rational pow2_rational(long e) {
    if (e >= 0) {
        if (e > 120) throw OverflowError("pow2_rational exponent too large");
        return Rational(int128(1) << e);
    }
    if (e < -120) throw OverflowError("pow2_rational exponent too small");
    return Rational(1, int128(1) << (-e));
}

}  // namespace mexpart
