#include "mexpart/genfun.hpp"

#include <future>

#include "mexpart/errors.hpp"

namespace mexpart {

QSeries ptt_series(long t, std::size_t trunc, Ring ring) {
    if (t < 1) throw Error("ptt_series requires t >= 1");
    QSeries inv_poch = inverse(pochhammer_series(1, trunc, ring));
    return mul(inv_poch, triangular_alt_series(t, trunc, ring));
}

QSeries ptt_parity_series(long t, std::size_t trunc) {
    if (t < 1) throw Error("ptt_parity_series requires t >= 1");
    Ring r2 = Ring::mod(2);
    QSeries cube = power(pochhammer_series(t, trunc, r2), 3);
    return mul(cube, inverse(pochhammer_series(1, trunc, r2)));
}

bool parity_rule_p11(long n) {
    if (n < 1) throw UndefinedStatisticError("parity rule is stated for n >= 1");
    for (long k = 1; k * (3 * k - 1) <= n; ++k) {
        if (n == k * (3 * k - 1) || n == k * (3 * k + 1)) return true;
    }
    return false;
}

bool parity_rule_p33(long n) {
    if (n < 1) throw UndefinedStatisticError("parity rule is stated for n >= 1");
    long long target = 3LL * n + 1;
    long long r = 0;
    while ((r + 1) * (r + 1) <= target) ++r;
    return r * r == target;
}

bool is_density_family(long t) {
    if (t % 3 == 0) t /= 3;
    return t >= 2 && (t & (t - 1)) == 0;
}

ParityScanReport density_scan(long t, long X, int threads) {
    if (X < 0) throw Error("density scan bound must be non-negative");
    if (X >= static_cast<long>(kMaxTrunc)) throw LimitExceededError("density scan bound above cap");
    QSeries parity = ptt_parity_series(t, static_cast<std::size_t>(X) + 1);

    ParityScanReport report;
    report.t = t;
    report.X = X;
    report.exploratory = !is_density_family(t);

    struct Window {
        long long odd = 0;
        std::vector<long> odd_indices;
    };
    auto scan_window = [&](long lo, long hi) {  // [lo, hi)
        Window w;
        for (long n = lo; n < hi; ++n) {
            if (parity.at(static_cast<std::size_t>(n)) != 0) {
                ++w.odd;
                w.odd_indices.push_back(n);
            }
        }
        return w;
    };

    std::vector<Window> windows;
    if (threads <= 1 || X < 1024) {
        windows.push_back(scan_window(0, X + 1));
    } else {
        long chunk = (X + threads) / threads;
        std::vector<std::future<Window>> futs;
        for (long lo = 0; lo <= X; lo += chunk) {
            long hi = std::min(lo + chunk, X + 1);
            futs.push_back(std::async(std::launch::async, scan_window, lo, hi));
        }
        for (auto& f : futs) windows.push_back(f.get());
    }
    for (auto& w : windows) {  // windows arrive in ascending order; merge is concatenation
        report.odd_count += w.odd;
        report.odd_indices.insert(report.odd_indices.end(), w.odd_indices.begin(),
                                  w.odd_indices.end());
    }
    report.even_count = (X + 1) - report.odd_count;
    return report;
}

}  // namespace mexpart
