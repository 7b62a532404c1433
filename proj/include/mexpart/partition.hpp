#pragma once

#include <functional>
#include <vector>

#include "mexpart/errors.hpp"

namespace mexpart {

// A partition: weakly decreasing positive parts.
struct Partition {
    std::vector<long> parts;

    long weight() const {
        long w = 0;
        for (long p : parts) w += p;
        return w;
    }
    bool empty() const { return parts.empty(); }
};

// The residue class a (mod A) whose least excluded member defines the mex.
struct MexSpec {
    long modulus;  // A >= 1
    long residue;  // 1 <= a <= A

    MexSpec(long A, long a) : modulus(A), residue(a) {
        if (A < 1 || a < 1 || a > A) throw Error("MexSpec requires 1 <= a <= A");
    }
};

// Enumeration is deliberately capped: p(n) grows superpolynomially and the
// brute-force oracle is only meant to back up the series engine.
inline constexpr long kDefaultEnumerationCap = 120;

// Visit every partition of n exactly once, in lexicographically decreasing
// order of the parts sequence ([5], [4,1], [3,2], [3,1,1], ...).
void for_each_partition(long n, const std::function<void(const Partition&)>& visit,
                        long cap = kDefaultEnumerationCap);

std::vector<Partition> enumerate_partitions(long n, long cap = kDefaultEnumerationCap);

// Smallest m > 0 with m == a (mod A) and m not a part of lambda.
long mex(const Partition& lambda, const MexSpec& spec);

// Number of partitions of n whose mex is congruent to a modulo 2A.
long long p_direct(long n, const MexSpec& spec, long cap = kDefaultEnumerationCap);

// Largest part minus number of parts. Undefined on the empty partition.
long rank(const Partition& lambda);

// Largest part if there are no ones; otherwise (#parts exceeding the number
// of ones) minus (number of ones). Undefined on the empty partition.
long crank(const Partition& lambda);

long long count_crank_nonneg(long n, long cap = kDefaultEnumerationCap);
long long count_rank_ge(long n, long bound, long cap = kDefaultEnumerationCap);

}  // namespace mexpart
