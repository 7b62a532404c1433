#include "mexpart/hecke.hpp"

#include <functional>
#include <numeric>

#include "mexpart/errors.hpp"
#include "mexpart/genfun.hpp"

// Coefficient convention: a(x) = 0 whenever x is not a non-negative integer,
// so a(n/p) contributes only when p | n.

namespace mexpart {

namespace {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// chi(d) * d^{weight-1} reduced into the ring.
int128 hecke_scale(const HeckeContext& ctx, long d, const Ring& ring) {
    int chi_d = ctx.chi.eval(d);
    if (chi_d == 0) return 0;
    if (ring.is_exact())
        return checked_mul(chi_d, checked_pow(d, static_cast<std::uint64_t>(ctx.weight - 1)));
    int128 m = static_cast<int128>(ring.modulus);
    int128 pw = 1;
    int128 base = ((static_cast<int128>(d) % m) + m) % m;
    for (long e = ctx.weight - 1; e > 0; e >>= 1) {
        if (e & 1) pw = pw * base % m;
        base = base * base % m;
    }
    int128 v = chi_d * pw % m;
    return v < 0 ? v + m : v;
}

}  // namespace

HeckeContext::HeckeContext(long weight_, KroneckerCharacter chi_, long level_)
    : weight(weight_), chi(std::move(chi_)), level(level_) {
    if (weight < 1) throw Error("Hecke context requires weight >= 1");
    if (level < 1) throw Error("Hecke context requires a positive level");
    if (!chi.dirichlet_valid)
        throw Error("character numerator " + std::to_string(chi.numerator) +
                    " is 3 mod 4: not a Dirichlet character");
}

HeckeContext context_for(const EtaQuotient& eq) {
    return HeckeContext(weight(eq), character(eq), eq.level);
}

QSeries hecke_Tp(const QSeries& f, long p, const HeckeContext& ctx, bool allow_level_divisor) {
    if (!is_prime_long(p)) throw Error("hecke_Tp requires a prime");
    if (ctx.level % p == 0 && !allow_level_divisor)
        throw Error("prime " + std::to_string(p) + " divides the level " +
                    std::to_string(ctx.level) + "; pass the override to proceed");
    std::size_t t = f.trunc() / static_cast<std::size_t>(p);
    if (t == 0) throw TruncationError("truncation exhausted: floor(T/p) = 0");
    QSeries r(f.ring(), t);
    int128 scale = hecke_scale(ctx, p, f.ring());
    for (std::size_t n = 0; n < t; ++n) {
        int128 v = f.at(n * static_cast<std::size_t>(p));
        if (n % static_cast<std::size_t>(p) == 0 && scale != 0)
            v = checked_add(v, checked_mul(scale, f.at(n / static_cast<std::size_t>(p))));
        r.set(n, v);
    }
    return r;
}

QSeries hecke_Tm(const QSeries& f, long m, const HeckeContext& ctx) {
    if (m < 1) throw Error("hecke_Tm requires m >= 1");
    std::size_t t = f.trunc() / static_cast<std::size_t>(m);
    if (t == 0) throw TruncationError("truncation exhausted: floor(T/m) = 0");
    std::vector<long> divs;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) divs.push_back(d);
    QSeries r(f.ring(), t);
    for (std::size_t n = 0; n < t; ++n) {
        int128 v = 0;
        for (long d : divs) {
            // d | gcd(n, m); gcd(0, m) = m so every divisor contributes at n = 0
            if (n % static_cast<std::size_t>(d) != 0) continue;
            int128 scale = hecke_scale(ctx, d, f.ring());
            if (scale == 0) continue;
            std::size_t idx = n * static_cast<std::size_t>(m) /
                              (static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
            v = checked_add(v, checked_mul(scale, f.at(idx)));
        }
        r.set(n, v);
    }
    return r;
}

ChainReport apply_chain(const QSeries& f, const std::vector<long>& primes,
                        const HeckeContext& ctx) {
    if (f.ring().modulus != 2) throw Error("apply_chain operates on mod-2 series");
    unsigned __int128 product = 1;
    for (long p : primes) {
        if (!is_prime_long(p) || p % 2 == 0 || p % 3 == 0)
            throw Error("chain primes must be coprime to 6");
        product *= static_cast<unsigned __int128>(p);
    }
    if (product > f.trunc())
        throw TruncationError("insufficient truncation for the chain: rebuild f at T >= " +
                              dec_string(static_cast<int128>(product)));
    ChainReport report;
    report.primes = primes;
    report.initial_trunc = f.trunc();
    QSeries cur = f;
    for (long p : primes) {
        cur = hecke_Tp(cur, p, ctx);
        report.trunc_after.push_back(cur.trunc());
    }
    report.surviving_exponents = cur.support();
    report.annihilated = report.surviving_exponents.empty();
    return report;
}

ProgressionReport progression_check(long alpha, Family family, const std::vector<long>& primes,
                                    long n_bound) {
    if (alpha < 1) throw Error("alpha must be >= 1");
    long long P = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        long p = primes[i];
        if (!is_prime_long(p) || p % 2 == 0 || p % 3 == 0)
            throw Error("progression primes must be coprime to 6");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[j] == p) throw Error("progression primes must be distinct");
        P *= p;
        if (P > (1LL << 40)) throw LimitExceededError("prime product too large for a desk check");
    }
    long t = (family == Family::H ? 1 : 3) * (1L << alpha);
    long long c = 3LL * t;  // 3*2^alpha for H, 9*2^alpha for S

    struct Target {
        long n;
        long long index;
    };
    std::vector<Target> targets;
    long long max_index = 0;
    for (long n = 1; n <= n_bound; ++n) {
        if (std::gcd(static_cast<long long>(n), P) != 1) continue;
        int128 numer = checked_add(checked_mul(P, n), 1 - c);
        if (numer < 0 || numer % 24 != 0) continue;
        if (numer / 24 >= static_cast<int128>(kMaxTrunc))
            throw LimitExceededError("progression indices exceed the series cap");
        long long idx = static_cast<long long>(numer / 24);
        targets.push_back({n, idx});
        max_index = std::max(max_index, idx);
    }

    ProgressionReport report;
    report.family = family;
    report.alpha = alpha;
    report.primes = primes;
    report.n_bound = n_bound;
    report.checked = static_cast<long long>(targets.size());
    report.divisibility_empty = targets.empty();
    if (targets.empty()) return report;

    QSeries parity = ptt_parity_series(t, static_cast<std::size_t>(max_index) + 1);
    for (const auto& tg : targets) {
        if (parity.at(static_cast<std::size_t>(tg.index)) != 0) report.violations.push_back(tg.n);
    }
    return report;
}

std::optional<std::vector<long>> probe_annihilating_chain(Family family, long alpha,
                                                          const std::vector<long>& pool,
                                                          int max_len, std::size_t window,
                                                          std::size_t trunc_budget) {
    if (window < 1 || window > kMaxTrunc) throw Error("probe window out of range");
    if (trunc_budget > kMaxTrunc) trunc_budget = kMaxTrunc;
    EtaQuotient eq = family == Family::H ? build_H(alpha) : build_S(alpha);
    HeckeContext ctx = context_for(eq);

    std::vector<long> chain;
    // chains of distinct pool primes, strictly increasing indices
    std::function<std::optional<std::vector<long>>(std::size_t, std::size_t, unsigned long long)>
        search = [&](std::size_t from, std::size_t remaining,
                     unsigned long long product) -> std::optional<std::vector<long>> {
        if (remaining == 0) {
            std::size_t t = product * window;
            if (t > trunc_budget) return std::nullopt;
            QSeries f = q_expansion(eq, t, Ring::mod(2));
            ChainReport report = apply_chain(f, chain, ctx);
            if (report.annihilated) return chain;
            return std::nullopt;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            unsigned long long next = product * static_cast<unsigned long long>(pool[i]);
            if (next > trunc_budget || next * window > trunc_budget) continue;
            chain.push_back(pool[i]);
            auto found = search(i + 1, remaining - 1, next);
            chain.pop_back();
            if (found) return found;
        }
        return std::nullopt;
    };

    for (int len = 1; len <= max_len; ++len) {
        auto found = search(0, static_cast<std::size_t>(len), 1);
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace mexpart
