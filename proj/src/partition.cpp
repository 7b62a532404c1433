#include "mexpart/partition.hpp"

#include <algorithm>

namespace mexpart {

namespace {

void emit_descending(long remaining, long max_part, Partition& scratch,
                     const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(scratch);
        return;
    }
    for (long k = std::min(remaining, max_part); k >= 1; --k) {
        scratch.parts.push_back(k);
        emit_descending(remaining - k, k, scratch, visit);
        scratch.parts.pop_back();
    }
}

bool contains_part(const Partition& lambda, long m) {
    // parts are sorted descending
    return std::binary_search(lambda.parts.rbegin(), lambda.parts.rend(), m);
}

}  // namespace

void for_each_partition(long n, const std::function<void(const Partition&)>& visit, long cap) {
    if (n < 0) throw Error("cannot partition a negative integer");
    if (n > cap) throw LimitExceededError("partition enumeration above the configured cap");
    Partition scratch;
    emit_descending(n, n == 0 ? 1 : n, scratch, visit);
}

std::vector<Partition> enumerate_partitions(long n, long cap) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

long mex(const Partition& lambda, const MexSpec& spec) {
    long largest = lambda.parts.empty() ? 0 : lambda.parts.front();
    for (long m = spec.residue;; m += spec.modulus) {
        if (m > largest || !contains_part(lambda, m)) return m;
    }
}

long long p_direct(long n, const MexSpec& spec, long cap) {
    long long count = 0;
    const long twoA = 2 * spec.modulus;
    for_each_partition(
        n,
        [&](const Partition& p) {
            long m = mex(p, spec);
            // m == residue (mod A) by construction; test the mod-2A refinement
            if ((m - spec.residue) % twoA == 0) ++count;
        },
        cap);
    return count;
}

long rank(const Partition& lambda) {
    if (lambda.empty()) throw UndefinedStatisticError("rank of the empty partition is undefined");
    return lambda.parts.front() - static_cast<long>(lambda.parts.size());
}

long crank(const Partition& lambda) {
    if (lambda.empty()) throw UndefinedStatisticError("crank of the empty partition is undefined");
    long ones = 0;
    for (auto it = lambda.parts.rbegin(); it != lambda.parts.rend() && *it == 1; ++it) ++ones;
    if (ones == 0) return lambda.parts.front();
    long exceeding = 0;
    for (long p : lambda.parts) {
        if (p > ones)
            ++exceeding;
        else
            break;  // descending order: nothing later can exceed
    }
    return exceeding - ones;
}

long long count_crank_nonneg(long n, long cap) {
    if (n < 1) throw UndefinedStatisticError("crank counts start at n = 1");
    long long count = 0;
    for_each_partition(n, [&](const Partition& p) { if (crank(p) >= 0) ++count; }, cap);
    return count;
}

long long count_rank_ge(long n, long bound, long cap) {
    if (n < 1) throw UndefinedStatisticError("rank counts start at n = 1");
    long long count = 0;
    for_each_partition(n, [&](const Partition& p) { if (rank(p) >= bound) ++count; }, cap);
    return count;
}

}  // namespace mexpart
