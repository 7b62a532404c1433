#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mexpart/qseries.hpp"
#include "mexpart/rational.hpp"

namespace mexpart {

// Symbolic eta-quotient prod_{delta | N} eta(delta z)^{r_delta}. The q-power
// bookkeeping stays in units of 1/24 until q_expansion() checks integrality.
struct EtaQuotient {
    long level = 1;              // N
    std::map<long, long> exps;   // delta -> r_delta, all delta | N, r != 0

    // Sum of delta * r_delta; the leading q-power is this over 24.
    long prefactor_24() const;
    long exponent_sum() const;
};

// Validates divisor structure, drops zero exponents, rejects empty maps.
EtaQuotient make_eta_quotient(long level, std::map<long, long> exps);

// Half the exponent sum; half-integral weights are out of scope.
long weight(const EtaQuotient& eq);

// Residues mod 24 of (sum delta*r, sum (N/delta)*r); (0,0) means the
// transformation law of an integer-weight eta-quotient holds on Gamma_0(N).
std::pair<int, int> check_level_conditions(const EtaQuotient& eq);

// Smallest m >= 1 such that N = base_level * m clears both residues above.
// Throws SearchCapError when no m <= cap works (the first residue does not
// depend on m, so it can rule out every m).
long minimal_level_multiplier(const std::map<long, long>& exps, long base_level, long cap = 48);
long minimal_admissible_level(const std::map<long, long>& exps, long base_level, long cap = 48);

// Kronecker symbol (a/n), fully extended: multiplicative in n, with
// (a/2) = 0, 1, -1 for a even, a = ±1 (8), a = ±3 (8), and (a/-1) = sign(a).
int kronecker(long long a, long long n);

// d -> (a/d) is a Dirichlet character iff a != 3 (mod 4).
bool kronecker_is_dirichlet(long long a);

// Quadratic character d -> (numerator/d). The raw value (-1)^ell * prod
// delta^{r_delta} has astronomically large prime-power content, so it is kept
// factored; evaluation uses a discriminant-style representative that matches
// the squarefree kernel on all odd d and is always a valid Dirichlet
// character.
struct KroneckerCharacter {
    long long numerator = 1;         // canonical representative, used by eval()
    long long squarefree_kernel = 1; // sign * squarefree part of the raw value
    int raw_sign = 1;                // sign of (-1)^ell * s
    std::map<long, long> raw_factored;  // prime -> exponent of |s| (may be negative)
    bool dirichlet_valid = true;     // numerator != 3 (mod 4)

    int eval(long long d) const { return kronecker(numerator, d); }
    std::string raw_string() const;
};

KroneckerCharacter character_from_factored(int sign, const std::map<long, long>& factored);
KroneckerCharacter character(const EtaQuotient& eq);

// Same symbol at every d <= d_max with gcd(d, coprime_to) == 1.
bool same_character_on(const KroneckerCharacter& a, const KroneckerCharacter& b, long long d_max,
                       long long coprime_to);

// Order of vanishing at the cusp c/d of Gamma_0(N) (c-independent):
// (N/24) * sum gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta).
Rational cusp_order(const EtaQuotient& eq, long d);

struct CuspEntry {
    long d;
    Rational order;
};

struct CuspReport {
    std::vector<CuspEntry> entries;  // one per divisor d | N, ascending
    Rational min_order;
    bool holomorphic = false;  // min_order >= 0
};

CuspReport cusp_report(const EtaQuotient& eq);

std::vector<long> divisors(long n);

// Holomorphy margins: positive rescalings of the cusp order of H_alpha
// (resp. S_alpha) at d | 9*2^{alpha+6}, convenient for exact table checks.
Rational holomorphy_margin_L(long alpha, long d);
Rational holomorphy_margin_K(long alpha, long d);

// The three divisor families of 9*2^{alpha+6} covered by the margin table:
// d | 72; d = {1,3,9}*2^r with 4 <= r <= alpha+3; same with alpha+4 <= s <= alpha+6.
enum class MarginRow { Small, Mid, High };

struct MarginRowClass {
    MarginRow row;
    long r;  // the power of 2 in d (meaningful for Mid/High)
};

// Every divisor should classify; returns nullopt for anything that falls
// outside the three families so callers can report it instead of assuming
// coverage.
std::optional<MarginRowClass> classify_margin_row(long alpha, long d);

// Closed forms of the margin rows (L table): 6+2^a, 6+3*2^a-2^{7+a-2r}, and
// 3/2 - 1/2^{a+1}.
Rational margin_row_value_L(long alpha, const MarginRowClass& row);

// The eta-quotient families attached to p_{2^a,2^a} (H) and p_{3*2^a,3*2^a} (S).
enum class Family { H, S };

// Smallest level multiplier that works for every alpha >= 1 at once (the
// per-alpha minimum can be smaller: H at alpha=1 admits m=3, but alpha=2
// already forces 12). This uniform choice puts every family member at level
// 9*2^{alpha+6}, the shape the nilpotency results want.
long family_level_multiplier(Family f);

EtaQuotient build_G(long alpha);
EtaQuotient build_H(long alpha);
EtaQuotient build_R(long alpha);
EtaQuotient build_S(long alpha);

// q^{(sum delta r)/24} * euler_product(exps); requires the leading power to
// be a non-negative integer.
QSeries q_expansion(const EtaQuotient& eq, std::size_t trunc, Ring ring);

struct ModularMeta {
    long weight = 0;
    long level = 1;
    KroneckerCharacter character;
    bool holomorphic = false;
};

// Expected metadata for the built-in families, with the character written in
// closed form straight from the transformation-law recipe (sign (-1)^ell).
ModularMeta family_meta_H(long alpha);
ModularMeta family_meta_S(long alpha);

struct LemmaCheck {
    std::string item;
    bool pass;
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaCheck> items;
    bool all_pass = true;
};

// Recompute weight, level conditions, character, and cusp orders; compare
// against expected. Failures are report entries, never exceptions.
LemmaReport verify_lemma(const EtaQuotient& eq, const ModularMeta& expected);

}  // namespace mexpart
