#include "mexpart/int128.hpp"

#include <algorithm>

namespace mexpart {

std::string dec_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // negate on the unsigned type so -2^127 does not overflow
    unsigned __int128 u =
        neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

int128 parse_int128(std::string_view s) {
    if (s.empty()) throw Error("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw Error("sign without digits in integer literal");
    int128 v = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw Error("invalid digit in integer literal");
        v = checked_add(checked_mul(v, 10), c - '0');
    }
    return neg ? -v : v;
}

}  // namespace mexpart
