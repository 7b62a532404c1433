#include "mexpart/etaquot.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "mexpart/errors.hpp"

namespace mexpart {

long EtaQuotient::prefactor_24() const {
    int128 s = 0;
    for (const auto& [delta, r] : exps) s = checked_add(s, checked_mul(delta, r));
    if (s > std::numeric_limits<long>::max() || s < std::numeric_limits<long>::min())
        throw OverflowError("sum delta*r does not fit a long");
    return static_cast<long>(s);
}

long EtaQuotient::exponent_sum() const {
    long s = 0;
    for (const auto& [delta, r] : exps) s += r;
    return s;
}

EtaQuotient make_eta_quotient(long level, std::map<long, long> exps) {
    if (level < 1) throw Error("eta-quotient level must be positive");
    if (level > (1L << 31))
        throw LimitExceededError("levels above 2^31 are outside the supported range");
    for (auto it = exps.begin(); it != exps.end();) {
        if (it->second == 0)
            it = exps.erase(it);
        else
            ++it;
    }
    if (exps.empty()) throw Error("eta-quotient needs at least one nonzero exponent");
    for (const auto& [delta, r] : exps) {
        (void)r;
        if (delta < 1 || level % delta != 0)
            throw NonDivisorError("eta argument " + std::to_string(delta) +
                                  " does not divide the level " + std::to_string(level));
    }
    return EtaQuotient{level, std::move(exps)};
}

long weight(const EtaQuotient& eq) {
    long s = eq.exponent_sum();
    if (s % 2 != 0) throw WeightParityError("exponent sum is odd: half-integral weight");
    return s / 2;
}

namespace {

int mod24(long v) {
    int r = static_cast<int>(v % 24);
    return r < 0 ? r + 24 : r;
}

}  // namespace

std::pair<int, int> check_level_conditions(const EtaQuotient& eq) {
    long s1 = 0, s2 = 0;
    for (const auto& [delta, r] : eq.exps) {
        // residues only; the full products can exceed 64 bits on large input
        s1 = (s1 + delta % 24 * (r % 24)) % 24;
        s2 = (s2 + (eq.level / delta) % 24 * (r % 24)) % 24;
    }
    return {mod24(s1), mod24(s2)};
}

long minimal_level_multiplier(const std::map<long, long>& exps, long base_level, long cap) {
    if (base_level < 1) throw Error("base level must be positive");
    long s1 = 0;
    for (const auto& [delta, r] : exps) {
        if (delta < 1 || base_level % delta != 0)
            throw NonDivisorError("eta argument does not divide the base level");
        s1 = (s1 + delta % 24 * (r % 24)) % 24;
    }
    if (mod24(s1) != 0)
        throw SearchCapError("sum delta*r is not 0 mod 24: no level multiplier can work");
    for (long m = 1; m <= cap; ++m) {
        long s2 = 0;
        for (const auto& [delta, r] : exps) {
            s2 = (s2 + (base_level / delta) % 24 * (m % 24) % 24 * (r % 24)) % 24;
        }
        if (mod24(s2) == 0) return m;
    }
    throw SearchCapError("no admissible level multiplier below the cap");
}

long minimal_admissible_level(const std::map<long, long>& exps, long base_level, long cap) {
    return base_level * minimal_level_multiplier(exps, base_level, cap);
}

int kronecker(long long a, long long n) {
    if (a == 0 && n == 0) throw Error("kronecker(0, 0) is undefined");
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;  // n was 0 before sign handling only if a != 0
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int twos = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++twos;
        }
        long long a8 = ((a % 8) + 8) % 8;
        if (twos % 2 == 1 && (a8 == 3 || a8 == 5)) result = -result;
    }
    // Jacobi step on odd positive n
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool kronecker_is_dirichlet(long long a) { return ((a % 4) + 4) % 4 != 3; }

std::string KroneckerCharacter::raw_string() const {
    std::ostringstream os;
    os << (raw_sign < 0 ? "-" : "");
    if (raw_factored.empty()) {
        os << "1";
    } else {
        bool first = true;
        for (const auto& [p, e] : raw_factored) {
            if (!first) os << "*";
            first = false;
            os << p;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

KroneckerCharacter character_from_factored(int sign, const std::map<long, long>& factored) {
    KroneckerCharacter chi;
    chi.raw_sign = sign < 0 ? -1 : 1;
    chi.raw_factored = factored;
    long long kernel = chi.raw_sign;
    for (const auto& [p, e] : factored) {
        if (e % 2 != 0) kernel *= p;
    }
    chi.squarefree_kernel = kernel;
    long long k4 = ((kernel % 4) + 4) % 4;
    // kernel is squarefree: residues 2 and 3 need the 4x lift to become a
    // discriminant-style numerator (e.g. -1 -> -4, 2 -> 8, -6 -> -24)
    chi.numerator = (k4 == 2 || k4 == 3) ? 4 * kernel : kernel;
    chi.dirichlet_valid = kronecker_is_dirichlet(chi.numerator);
    return chi;
}

namespace {

std::map<long, long> factorize(long n) {
    std::map<long, long> f;
    for (long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

}  // namespace

KroneckerCharacter character(const EtaQuotient& eq) {
    long ell = weight(eq);
    std::map<long, long> factored;
    for (const auto& [delta, r] : eq.exps) {
        for (const auto& [p, e] : factorize(delta)) factored[p] += e * r;
    }
    for (auto it = factored.begin(); it != factored.end();) {
        if (it->second == 0)
            it = factored.erase(it);
        else
            ++it;
    }
    return character_from_factored(ell % 2 == 0 ? 1 : -1, factored);
}

bool same_character_on(const KroneckerCharacter& a, const KroneckerCharacter& b, long long d_max,
                       long long coprime_to) {
    for (long long d = 1; d <= d_max; ++d) {
        if (std::gcd(d, coprime_to) != 1) continue;
        if (a.eval(d) != b.eval(d)) return false;
    }
    return true;
}

Rational cusp_order(const EtaQuotient& eq, long d) {
    if (d < 1 || eq.level % d != 0) throw NonDivisorError("cusp denominator must divide the level");
    const long N = eq.level;
    Rational sum(0);
    for (const auto& [delta, r] : eq.exps) {
        long g = std::gcd(d, delta);
        sum = sum + Rational(checked_mul(checked_mul(int128(g), int128(g)), int128(r)),
                             checked_mul(checked_mul(int128(std::gcd(d, N / d)), int128(d)),
                                         int128(delta)));
    }
    return Rational(N, 24) * sum;
}

std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

CuspReport cusp_report(const EtaQuotient& eq) {
    CuspReport report;
    bool first = true;
    for (long d : divisors(eq.level)) {
        Rational o = cusp_order(eq, d);
        report.entries.push_back({d, o});
        if (first || o < report.min_order) report.min_order = o;
        first = false;
    }
    report.holomorphic = report.min_order >= Rational(0);
    return report;
}

namespace {

void require_alpha(long alpha) {
    if (alpha < 1) throw Error("alpha must be >= 1");
    // 9*2^(alpha+6) must stay below the level cap
    if (alpha > 21) throw LimitExceededError("alpha above the supported range");
}

long pow2l(long e) { return 1L << e; }

Rational gcd_square_ratio(long d, long a, long b) {
    long ga = std::gcd(d, a), gb = std::gcd(d, b);
    return Rational(checked_mul(int128(ga), int128(ga)), checked_mul(int128(gb), int128(gb)));
}

}  // namespace

Rational holomorphy_margin_L(long alpha, long d) {
    require_alpha(alpha);
    long N = 9 * pow2l(alpha + 6);
    if (d < 1 || N % d != 0) throw NonDivisorError("d must divide 9*2^(alpha+6)");
    Rational u = gcd_square_ratio(d, 3 * pow2l(alpha + 3), 3 * pow2l(alpha + 4));
    Rational v = gcd_square_ratio(d, 24, 3 * pow2l(alpha + 4));
    return Rational(pow2l(alpha + 2) + 6) * u - Rational(pow2l(alpha + 1)) * v -
           Rational(pow2l(alpha));
}

Rational holomorphy_margin_K(long alpha, long d) {
    require_alpha(alpha);
    long N = 9 * pow2l(alpha + 6);
    if (d < 1 || N % d != 0) throw NonDivisorError("d must divide 9*2^(alpha+6)");
    Rational u = gcd_square_ratio(d, 9 * pow2l(alpha + 3), 9 * pow2l(alpha + 4));
    Rational v = gcd_square_ratio(d, 24, 9 * pow2l(alpha + 4));
    return Rational(pow2l(alpha + 3) + 6) * u - Rational(3 * pow2l(alpha + 1)) * v -
           Rational(pow2l(alpha + 1));
}

std::optional<MarginRowClass> classify_margin_row(long alpha, long d) {
    require_alpha(alpha);
    long N = 9 * pow2l(alpha + 6);
    if (d < 1 || N % d != 0) throw NonDivisorError("d must divide 9*2^(alpha+6)");
    long r = 0, rest = d;
    while (rest % 2 == 0) {
        rest /= 2;
        ++r;
    }
    if (rest != 1 && rest != 3 && rest != 9) return std::nullopt;
    if (r <= 3) return MarginRowClass{MarginRow::Small, r};
    if (r <= alpha + 3) return MarginRowClass{MarginRow::Mid, r};
    if (r <= alpha + 6) return MarginRowClass{MarginRow::High, r};
    return std::nullopt;
}

Rational margin_row_value_L(long alpha, const MarginRowClass& row) {
    require_alpha(alpha);
    switch (row.row) {
        case MarginRow::Small:
            return Rational(6 + pow2l(alpha));
        case MarginRow::Mid:
            return Rational(6 + 3 * pow2l(alpha)) - pow2_rational(7 + alpha - 2 * row.r);
        case MarginRow::High:
            return Rational(3, 2) - pow2_rational(-(alpha + 1));
    }
    throw Error("unreachable margin row");
}

namespace {

std::map<long, long> family_exps(Family f, long alpha) {
    require_alpha(alpha);
    long odd = f == Family::H ? 3 : 9;
    long d1 = odd * pow2l(alpha + 3);
    long d2 = odd * pow2l(alpha + 4);
    long shift = f == Family::H ? 1 : 2;
    return {{d1, 3 + pow2l(alpha + shift)}, {24, -1}, {d2, -pow2l(alpha + shift - 1)}};
}

std::map<long, long> aux_exps(Family f, long alpha) {
    require_alpha(alpha);
    long odd = f == Family::H ? 3 : 9;
    return {{odd * pow2l(alpha + 3), 2}, {odd * pow2l(alpha + 4), -1}};
}

}  // namespace

long family_level_multiplier(Family f) {
    // Uniform-in-alpha solution of the admissibility congruence; the lcm
    // stabilizes immediately (H: lcm(3, 12, ...) = 12, S: 4 throughout).
    long m = 1;
    for (long alpha = 1; alpha <= 8; ++alpha) {
        long base = (f == Family::H ? 3 : 9) * pow2l(alpha + 4);
        m = std::lcm(m, minimal_level_multiplier(family_exps(f, alpha), base));
    }
    return m;
}

EtaQuotient build_G(long alpha) {
    return make_eta_quotient(9 * pow2l(alpha + 6), aux_exps(Family::H, alpha));
}

EtaQuotient build_H(long alpha) {
    return make_eta_quotient(9 * pow2l(alpha + 6), family_exps(Family::H, alpha));
}

EtaQuotient build_R(long alpha) {
    return make_eta_quotient(9 * pow2l(alpha + 6), aux_exps(Family::S, alpha));
}

EtaQuotient build_S(long alpha) {
    return make_eta_quotient(9 * pow2l(alpha + 6), family_exps(Family::S, alpha));
}

QSeries q_expansion(const EtaQuotient& eq, std::size_t trunc, Ring ring) {
    long pre = eq.prefactor_24();
    if (pre % 24 != 0)
        throw ExponentError("leading q-power " + std::to_string(pre) + "/24 is fractional");
    long e0 = pre / 24;
    if (e0 < 0) throw ExponentError("negative leading q-power: pole at infinity");
    if (static_cast<std::size_t>(e0) >= trunc) return QSeries::zero(ring, trunc);
    QSeries product = euler_product(eq.exps, trunc - static_cast<std::size_t>(e0), ring);
    return shift(product, static_cast<std::size_t>(e0));
}

ModularMeta family_meta_H(long alpha) {
    require_alpha(alpha);
    long ell = pow2l(alpha - 1) + 1;
    std::map<long, long> fac = {{2, (alpha + 2) * (pow2l(alpha) + 3)}, {3, pow2l(alpha) + 2}};
    return ModularMeta{ell, 9 * pow2l(alpha + 6),
                       character_from_factored(ell % 2 == 0 ? 1 : -1, fac), true};
}

ModularMeta family_meta_S(long alpha) {
    require_alpha(alpha);
    long ell = pow2l(alpha) + 1;
    std::map<long, long> fac = {{2, (alpha + 2) * (pow2l(alpha + 1) + 3)},
                                {3, pow2l(alpha + 2) + 5}};
    return ModularMeta{ell, 9 * pow2l(alpha + 6),
                       character_from_factored(ell % 2 == 0 ? 1 : -1, fac), true};
}

LemmaReport verify_lemma(const EtaQuotient& eq, const ModularMeta& expected) {
    LemmaReport report;
    auto push = [&](std::string item, bool pass, std::string detail) {
        report.items.push_back({std::move(item), pass, std::move(detail)});
        report.all_pass = report.all_pass && pass;
    };

    try {
        long w = weight(eq);
        push("weight", w == expected.weight,
             "computed " + std::to_string(w) + ", expected " + std::to_string(expected.weight));
    } catch (const WeightParityError& e) {
        push("weight", false, e.what());
    }

    auto [c1, c2] = check_level_conditions(eq);
    push("level-conditions", c1 == 0 && c2 == 0,
         "residues (" + std::to_string(c1) + ", " + std::to_string(c2) + ") mod 24");

    push("level", eq.level == expected.level,
         "level " + std::to_string(eq.level) + ", expected " + std::to_string(expected.level));

    try {
        KroneckerCharacter chi = character(eq);
        bool same = same_character_on(chi, expected.character, 1000, 6);
        push("character", same,
             "computed " + chi.raw_string() + " (numerator " + std::to_string(chi.numerator) +
                 "), expected numerator " + std::to_string(expected.character.numerator));
    } catch (const WeightParityError& e) {
        push("character", false, e.what());
    }

    CuspReport cusps = cusp_report(eq);
    push("cusp-orders", cusps.holomorphic == expected.holomorphic,
         "min order " + cusps.min_order.str());

    return report;
}

}  // namespace mexpart
