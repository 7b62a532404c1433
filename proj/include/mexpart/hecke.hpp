#pragma once

#include <optional>
#include <vector>

#include "mexpart/etaquot.hpp"
#include "mexpart/qseries.hpp"

namespace mexpart {

// Weight/character/level data the Hecke action needs. The character must be
// a valid Dirichlet character (the discriminant-style numerators produced by
// etaquot always are).
struct HeckeContext {
    long weight;
    KroneckerCharacter chi;
    long level;

    HeckeContext(long weight_, KroneckerCharacter chi_, long level_);
};

HeckeContext context_for(const EtaQuotient& eq);

// f|T_p: coefficient at n is a(pn) + chi(p) p^{weight-1} a(n/p), where a(x)
// vanishes whenever x is not a non-negative integer. Result truncation is
// floor(trunc/p), strictly: the engine never extrapolates.
QSeries hecke_Tp(const QSeries& f, long p, const HeckeContext& ctx,
                 bool allow_level_divisor = false);

// f|T_m: coefficient at n is sum_{d | gcd(n,m)} chi(d) d^{weight-1} a(nm/d^2).
QSeries hecke_Tm(const QSeries& f, long m, const HeckeContext& ctx);

struct ChainReport {
    std::vector<long> primes;
    std::vector<std::size_t> trunc_after;   // effective truncation after each step
    bool annihilated = false;               // final series is 0 up to its truncation
    std::vector<std::size_t> surviving_exponents;  // nonzero mod-2 coefficients
    std::size_t initial_trunc = 0;
};

// Sequential T_p applications over a mod-2 series. Requires the initial
// truncation to be at least the product of the primes, so the final
// truncation stays >= 1.
ChainReport apply_chain(const QSeries& f, const std::vector<long>& primes,
                        const HeckeContext& ctx);

struct ProgressionReport {
    Family family;
    long alpha = 0;
    std::vector<long> primes;
    long n_bound = 0;
    long long checked = 0;
    std::vector<long> violations;      // n values whose target parity is odd
    bool divisibility_empty = false;    // no n <= n_bound met the integrality condition
};

// For each n <= n_bound coprime to the primes with (P*n + 1 - c) divisible by
// 24 (c = 3*2^alpha for H, 9*2^alpha for S), checks that
// p_{...}((P*n + 1 - c)/24) is even, via the parity series.
ProgressionReport progression_check(long alpha, Family family, const std::vector<long>& primes,
                                    long n_bound);

// Search chains of distinct primes from the pool (by length, then
// lexicographically) for one whose application annihilates the family member
// mod 2. `window` is how many post-chain coefficients must vanish; the base
// expansion is built at product * window, capped by trunc_budget.
std::optional<std::vector<long>> probe_annihilating_chain(Family family, long alpha,
                                                          const std::vector<long>& pool,
                                                          int max_len, std::size_t window = 200,
                                                          std::size_t trunc_budget = 1u << 21);

}  // namespace mexpart
