#pragma once

#include <vector>

#include "mexpart/qseries.hpp"

namespace mexpart {

// Parity census of p_{t,t}(n) for 0 <= n <= X. For t in {2^a, 3*2^a : a >= 1}
// the even side is expected to dominate as X grows; other t values are
// allowed but tagged exploratory (no density claim attaches to them).
struct ParityScanReport {
    long t = 0;
    long X = 0;
    long long even_count = 0;
    long long odd_count = 0;
    std::vector<long> odd_indices;  // ascending
    bool exploratory = false;
};

// Generating function of p_{t,t}: (1/(q;q)_inf) * sum (-1)^n q^{t n(n+1)/2}.
// Over the exact ring the coefficient at n is p_{t,t}(n).
QSeries ptt_series(long t, std::size_t trunc, Ring ring = Ring::exact());

// Mod-2 form (q^t;q^t)^3 / (q;q): same parities as ptt_series, by the
// psi(q^t) = (q^{2t};q^{2t})^2/(q^t;q^t) reduction in characteristic 2.
QSeries ptt_parity_series(long t, std::size_t trunc);

// p_{1,1}(n) is odd iff n = k(3k-1) or k(3k+1) for some k >= 1 (n >= 1).
bool parity_rule_p11(long n);

// p_{3,3}(n) is odd iff 3n+1 is a perfect square (n >= 1).
bool parity_rule_p33(long n);

// t of the form 2^a or 3*2^a with a >= 1.
bool is_density_family(long t);

ParityScanReport density_scan(long t, long X, int threads = 1);

}  // namespace mexpart
