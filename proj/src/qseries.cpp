#include "mexpart/qseries.hpp"

#include <algorithm>
#include <utility>

#include "mexpart/errors.hpp"

namespace mexpart {

Ring Ring::mod(std::uint64_t m) {
    if (m < 2) throw Error("modulus must be >= 2");
    if (m > (std::uint64_t(1) << 31)) throw LimitExceededError("modulus above 2^31 is unsupported");
    return Ring{m};
}

QSeries::QSeries(Ring ring, std::size_t trunc) : ring_(ring) {
    if (trunc == 0) throw Error("truncation order must be positive");
    if (trunc > kMaxTrunc) throw LimitExceededError("truncation order above cap");
    coeffs_.assign(trunc, 0);
}

QSeries QSeries::constant(Ring ring, int128 c, std::size_t trunc) {
    QSeries f(ring, trunc);
    f.set(0, c);
    return f;
}

QSeries QSeries::monomial(Ring ring, std::size_t e, int128 c, std::size_t trunc) {
    QSeries f(ring, trunc);
    f.set(e, c);
    return f;
}

int128 QSeries::normalize(int128 v) const {
    if (ring_.is_exact()) return v;
    int128 m = static_cast<int128>(ring_.modulus);
    int128 r = v % m;
    if (r < 0) r += m;
    return r;
}

int128 QSeries::at(std::size_t e) const {
    if (e >= coeffs_.size()) throw Error("coefficient index beyond truncation");
    return coeffs_[e];
}

void QSeries::set(std::size_t e, int128 v) {
    if (e >= coeffs_.size()) throw Error("coefficient index beyond truncation");
    coeffs_[e] = normalize(v);
}

void QSeries::add_at(std::size_t e, int128 v) {
    if (e >= coeffs_.size()) throw Error("coefficient index beyond truncation");
    coeffs_[e] = normalize(checked_add(coeffs_[e], v));
}

bool QSeries::is_zero() const {
    for (int128 c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::vector<std::size_t> QSeries::support() const {
    std::vector<std::size_t> s;
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
        if (coeffs_[e] != 0) s.push_back(e);
    return s;
}

namespace {

void require_same_ring(const QSeries& f, const QSeries& g) {
    if (f.ring() != g.ring()) throw RingMismatchError("series have different coefficient rings");
}

std::vector<std::pair<std::size_t, int128>> nonzeros(const QSeries& f, std::size_t below) {
    std::vector<std::pair<std::size_t, int128>> nz;
    for (std::size_t e = 0; e < below && e < f.trunc(); ++e) {
        int128 c = f.at(e);
        if (c != 0) nz.emplace_back(e, c);
    }
    return nz;
}

// Modular inverse via extended Euclid; throws when a is not a unit.
int128 mod_inverse(int128 a, int128 m) {
    int128 r0 = m, r1 = ((a % m) + m) % m;
    int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        int128 q = r0 / r1;
        int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        int128 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw NonUnitError("constant term is not a unit in the ring");
    return ((t0 % m) + m) % m;
}

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

bool agree(const QSeries& f, const QSeries& g, std::size_t* bound) {
    require_same_ring(f, g);
    std::size_t t = std::min(f.trunc(), g.trunc());
    if (bound) *bound = t;
    for (std::size_t e = 0; e < t; ++e)
        if (f.at(e) != g.at(e)) return false;
    return true;
}

bool operator==(const QSeries& f, const QSeries& g) { return agree(f, g); }

QSeries add(const QSeries& f, const QSeries& g) {
    require_same_ring(f, g);
    std::size_t t = std::min(f.trunc(), g.trunc());
    QSeries r(f.ring(), t);
    for (std::size_t e = 0; e < t; ++e) r.set(e, checked_add(f.at(e), g.at(e)));
    return r;
}

QSeries sub(const QSeries& f, const QSeries& g) {
    require_same_ring(f, g);
    std::size_t t = std::min(f.trunc(), g.trunc());
    QSeries r(f.ring(), t);
    for (std::size_t e = 0; e < t; ++e) r.set(e, checked_sub(f.at(e), g.at(e)));
    return r;
}

QSeries negate(const QSeries& f) {
    QSeries r(f.ring(), f.trunc());
    for (std::size_t e = 0; e < f.trunc(); ++e) r.set(e, checked_sub(0, f.at(e)));
    return r;
}

namespace detail {

QSeries mul_schoolbook(const QSeries& f, const QSeries& g, std::size_t trunc) {
    QSeries r(f.ring(), trunc);
    // Iterate the sparser factor on the outside; eta-quotient work multiplies
    // theta-sparse series into dense ones all the time.
    auto nf = nonzeros(f, trunc);
    auto ng = nonzeros(g, trunc);
    const QSeries& inner = nf.size() <= ng.size() ? g : f;
    const auto& outer_nz = nf.size() <= ng.size() ? nf : ng;
    for (const auto& [e, c] : outer_nz) {
        std::size_t jmax = trunc - e;
        for (std::size_t j = 0; j < jmax && j < inner.trunc(); ++j) {
            int128 d = inner.at(j);
            if (d != 0) r.add_at(e + j, checked_mul(c, d));
        }
    }
    return r;
}

QSeries mul_mod2_packed(const QSeries& f, const QSeries& g, std::size_t trunc) {
    const std::size_t words = (trunc + 63) / 64;
    std::vector<std::uint64_t> b(words, 0), acc(words, 0);
    for (std::size_t e = 0; e < trunc && e < g.trunc(); ++e)
        if (g.at(e) != 0) b[e / 64] |= std::uint64_t(1) << (e % 64);
    for (std::size_t e = 0; e < trunc && e < f.trunc(); ++e) {
        if (f.at(e) == 0) continue;
        // acc ^= b << e, dropping bits at or above trunc
        const std::size_t ws = e / 64, bs = e % 64;
        if (bs == 0) {
            for (std::size_t w = 0; w + ws < words; ++w) acc[w + ws] ^= b[w];
        } else {
            for (std::size_t w = 0; w + ws < words; ++w) {
                acc[w + ws] ^= b[w] << bs;
                if (w + ws + 1 < words) acc[w + ws + 1] ^= b[w] >> (64 - bs);
            }
        }
    }
    QSeries r(f.ring(), trunc);
    for (std::size_t e = 0; e < trunc; ++e)
        if ((acc[e / 64] >> (e % 64)) & 1) r.set(e, 1);
    return r;
}

}  // namespace detail

QSeries mul(const QSeries& f, const QSeries& g) {
    require_same_ring(f, g);
    std::size_t t = std::min(f.trunc(), g.trunc());
    if (f.ring().modulus == 2) return detail::mul_mod2_packed(f, g, t);
    return detail::mul_schoolbook(f, g, t);
}

QSeries shift(const QSeries& f, std::size_t k) {
    std::size_t t = f.trunc() + k;
    if (t > kMaxTrunc) throw LimitExceededError("shift pushes truncation above cap");
    QSeries r(f.ring(), t);
    for (std::size_t e = 0; e < f.trunc(); ++e) r.set(e + k, f.at(e));
    return r;
}

QSeries truncate(const QSeries& f, std::size_t trunc) {
    if (trunc > f.trunc()) throw Error("cannot extend a truncation (would fabricate zeros)");
    QSeries r(f.ring(), trunc);
    for (std::size_t e = 0; e < trunc; ++e) r.set(e, f.at(e));
    return r;
}

QSeries inverse(const QSeries& f) {
    const std::size_t t = f.trunc();
    int128 a0 = f.at(0);
    int128 b0;
    if (f.ring().is_exact()) {
        if (a0 != 1 && a0 != -1) throw NonUnitError("constant term is not a unit in the ring");
        b0 = a0;
    } else {
        b0 = mod_inverse(a0, static_cast<int128>(f.ring().modulus));
    }
    QSeries b(f.ring(), t);
    b.set(0, b0);
    auto nz = nonzeros(f, t);  // includes exponent 0; skipped below
    for (std::size_t n = 1; n < t; ++n) {
        int128 s = 0;
        for (const auto& [j, c] : nz) {
            if (j == 0) continue;
            if (j > n) break;
            int128 term = checked_mul(c, b.at(n - j));
            s = b.normalize(checked_add(s, term));
        }
        b.set(n, checked_sub(0, checked_mul(b0, s)));
    }
    return b;
}

QSeries power(const QSeries& f, std::uint64_t e) {
    QSeries result = QSeries::one(f.ring(), f.trunc());
    QSeries base = f;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

QSeries reduce_mod(const QSeries& f, std::uint64_t m) {
    if (!f.ring().is_exact()) throw Error("reduce_mod expects an exact-ring series");
    QSeries r(Ring::mod(m), f.trunc());
    for (std::size_t e = 0; e < f.trunc(); ++e) r.set(e, f.at(e));
    return r;
}

QSeries pochhammer_series(long delta, std::size_t trunc, Ring ring) {
    if (delta < 1) throw Error("pochhammer_series requires delta >= 1");
    QSeries r(ring, trunc);
    r.set(0, 1);
    for (long k = 1;; ++k) {
        // generalized pentagonal exponents k(3k-1)/2 and k(3k+1)/2, sign (-1)^k
        unsigned __int128 e1 = static_cast<unsigned __int128>(delta) * k * (3 * k - 1) / 2;
        if (e1 >= trunc) break;
        int128 sgn = (k % 2 == 0) ? 1 : -1;
        r.set(static_cast<std::size_t>(e1), sgn);
        unsigned __int128 e2 = static_cast<unsigned __int128>(delta) * k * (3 * k + 1) / 2;
        if (e2 < trunc) r.set(static_cast<std::size_t>(e2), sgn);
    }
    return r;
}

QSeries euler_product(const std::map<long, long>& exps, std::size_t trunc, Ring ring) {
    QSeries num = QSeries::one(ring, trunc);
    QSeries den = QSeries::one(ring, trunc);
    bool have_den = false;
    for (const auto& [delta, r] : exps) {
        if (r == 0) continue;
        QSeries p = pochhammer_series(delta, trunc, ring);
        if (r > 0) {
            num = mul(num, power(p, static_cast<std::uint64_t>(r)));
        } else {
            den = mul(den, power(p, static_cast<std::uint64_t>(-r)));
            have_den = true;
        }
    }
    return have_den ? mul(num, inverse(den)) : num;
}

QSeries psi_series(std::size_t trunc, Ring ring) {
    QSeries r(ring, trunc);
    for (unsigned __int128 n = 0;; ++n) {
        unsigned __int128 e = n * (n + 1) / 2;
        if (e >= trunc) break;
        r.set(static_cast<std::size_t>(e), 1);
    }
    return r;
}

QSeries triangular_alt_series(long t, std::size_t trunc, Ring ring) {
    if (t < 1) throw Error("triangular_alt_series requires t >= 1");
    QSeries r(ring, trunc);
    for (unsigned __int128 n = 0;; ++n) {
        unsigned __int128 e = static_cast<unsigned __int128>(t) * n * (n + 1) / 2;
        if (e >= trunc) break;
        r.set(static_cast<std::size_t>(e), (n % 2 == 0) ? 1 : -1);
    }
    return r;
}

bool verify_binomial_congruence(long p, unsigned j, std::size_t trunc) {
    if (!is_prime_long(p)) throw Error("verify_binomial_congruence requires a prime p");
    if (j < 1) throw Error("verify_binomial_congruence requires j >= 1");
    std::uint64_t pj = 1;
    for (unsigned i = 0; i < j; ++i) {
        if (pj > (std::uint64_t(1) << 31) / static_cast<std::uint64_t>(p))
            throw LimitExceededError("p^j above the modulus cap");
        pj *= static_cast<std::uint64_t>(p);
    }
    Ring ring = Ring::mod(pj);
    QSeries one_minus_q(ring, trunc);
    one_minus_q.set(0, 1);
    if (trunc > 1) one_minus_q.set(1, -1);
    QSeries one_minus_qp(ring, trunc);
    one_minus_qp.set(0, 1);
    if (trunc > static_cast<std::size_t>(p)) one_minus_qp.set(static_cast<std::size_t>(p), -1);
    QSeries lhs = power(one_minus_q, pj);
    QSeries rhs = power(one_minus_qp, pj / static_cast<std::uint64_t>(p));
    return lhs == rhs;
}

}  // namespace mexpart
