#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mexpart/int128.hpp"

namespace mexpart {

// Coefficient ring: exact integers (modulus == 0) or integers mod m, m >= 2.
struct Ring {
    std::uint64_t modulus = 0;

    static Ring exact() { return Ring{0}; }
    static Ring mod(std::uint64_t m);

    bool is_exact() const { return modulus == 0; }

    friend bool operator==(const Ring& a, const Ring& b) { return a.modulus == b.modulus; }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
};

// Hard cap on truncation orders, so a bad shift cannot allocate the machine away.
inline constexpr std::size_t kMaxTrunc = std::size_t(1) << 24;

// Truncated formal power series in q. Coefficients are stored densely for
// exponents in [0, trunc()); the truncation is explicit and never silently
// extended. Values are immutable in practice: every operation returns a new
// series.
class QSeries {
public:
    QSeries(Ring ring, std::size_t trunc);

    static QSeries zero(Ring ring, std::size_t trunc) { return QSeries(ring, trunc); }
    static QSeries one(Ring ring, std::size_t trunc) { return constant(ring, 1, trunc); }
    static QSeries constant(Ring ring, int128 c, std::size_t trunc);
    static QSeries monomial(Ring ring, std::size_t e, int128 c, std::size_t trunc);

    const Ring& ring() const { return ring_; }
    std::size_t trunc() const { return coeffs_.size(); }

    int128 at(std::size_t e) const;
    void set(std::size_t e, int128 v);
    void add_at(std::size_t e, int128 v);

    bool is_zero() const;
    std::vector<std::size_t> support() const;

    // Reduce an arbitrary integer into the ring ([0, m) for mod-m rings).
    int128 normalize(int128 v) const;

private:
    Ring ring_;
    std::vector<int128> coeffs_;
};

// Compare coefficients up to min(trunc, trunc); *bound receives that min.
bool agree(const QSeries& f, const QSeries& g, std::size_t* bound = nullptr);
bool operator==(const QSeries& f, const QSeries& g);
inline bool operator!=(const QSeries& f, const QSeries& g) { return !(f == g); }

QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries negate(const QSeries& f);
QSeries mul(const QSeries& f, const QSeries& g);

inline QSeries operator+(const QSeries& f, const QSeries& g) { return add(f, g); }
inline QSeries operator-(const QSeries& f, const QSeries& g) { return sub(f, g); }
inline QSeries operator*(const QSeries& f, const QSeries& g) { return mul(f, g); }

// Multiply by q^k; the result is honestly known up to trunc + k.
QSeries shift(const QSeries& f, std::size_t k);

// Restrict to a smaller truncation (raising it would fabricate zeros).
QSeries truncate(const QSeries& f, std::size_t trunc);

// Multiplicative inverse; requires a unit constant term.
QSeries inverse(const QSeries& f);

QSeries power(const QSeries& f, std::uint64_t e);

// Coefficient-wise reduction of an exact-ring series into Z/m.
QSeries reduce_mod(const QSeries& f, std::uint64_t m);

// (q^delta; q^delta)_infinity via the pentagonal-number expansion
// sum_{k in Z} (-1)^k q^{delta * k(3k-1)/2}.
QSeries pochhammer_series(long delta, std::size_t trunc, Ring ring);

// prod_{delta} prod_{n>=1} (1 - q^{delta n})^{r_delta}; negative exponents go
// through inverse(). This is the q-product part of an eta-quotient, without
// the q^{delta/24} prefactors.
QSeries euler_product(const std::map<long, long>& exps, std::size_t trunc, Ring ring);

// sum_{n>=0} q^{n(n+1)/2}
QSeries psi_series(std::size_t trunc, Ring ring = Ring::exact());

// sum_{n>=0} (-1)^n q^{t n(n+1)/2}
QSeries triangular_alt_series(long t, std::size_t trunc, Ring ring = Ring::exact());

// (1-q)^{p^j} == (1-q^p)^{p^{j-1}} (mod p^j), checked coefficient-wise up to trunc.
bool verify_binomial_congruence(long p, unsigned j, std::size_t trunc);

namespace detail {
// Generic Cauchy product, any ring. The mod-2 path must stay bit-identical
// with this one; tests compare the two.
QSeries mul_schoolbook(const QSeries& f, const QSeries& g, std::size_t trunc);
// Bit-packed carry-less product, mod-2 rings only.
QSeries mul_mod2_packed(const QSeries& f, const QSeries& g, std::size_t trunc);
}  // namespace detail

}  // namespace mexpart
