#include <doctest.h>

#include "mexpart/serialize.hpp"
#include "oracles.hpp"

using namespace mexpart;

TEST_CASE("qseries json round trip") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        Ring ring = trial % 2 == 0 ? Ring::exact() : Ring::mod(9);
        QSeries f = oracles::random_series(rng, ring, 1 + rng() % 40);
        QSeries back = qseries_from_json(qseries_to_json(f));
        CHECK(back.ring() == f.ring());
        CHECK(back.trunc() == f.trunc());
        CHECK(back == f);
    }

    // coefficients beyond int64 go through the string path
    QSeries wide = QSeries::constant(Ring::exact(), checked_pow(2, 100), 3);
    ordered_json j = qseries_to_json(wide);
    CHECK(j["coeffs"][0].is_string());
    CHECK(qseries_from_json(j) == wide);
    CHECK(parse_int128(dec_string(checked_pow(2, 100))) == checked_pow(2, 100));
}

TEST_CASE("eta quotient json round trip") {
    EtaQuotient h1 = build_H(1);
    ordered_json j = eta_quotient_to_json(h1);
    CHECK(j["level"] == 1152);
    EtaQuotient back = eta_quotient_from_json(j);
    CHECK(back.level == h1.level);
    CHECK(back.exps == h1.exps);

    CHECK_THROWS_AS(eta_quotient_from_json(ordered_json{{"level", 12}, {"exps", {{5, 1}}}}),
                    Error);
}

TEST_CASE("report json shapes") {
    ordered_json chi = character_to_json(character(build_S(1)));
    CHECK(chi["numerator"] == -24);
    CHECK(chi["squarefree_kernel"] == -6);
    CHECK(chi["raw"] == "-2^21*3^13");
    CHECK(chi["dirichlet_valid"] == true);

    ordered_json cusps = cusp_report_to_json(cusp_report(build_H(1)));
    CHECK(cusps["holomorphic"] == true);
    CHECK(cusps["entries"].size() == 24);

    ChainReport chain;
    chain.primes = {5, 7};
    chain.trunc_after = {280, 40};
    chain.surviving_exponents.assign(80, 1);
    ordered_json cj = chain_report_to_json(chain);
    CHECK(cj["surviving_exponents"].size() == 50);  // capped
    CHECK(cj["surviving_count"] == 80);
}

TEST_CASE("digest is stable and input-sensitive") {
    ordered_json a{{"x", 1}, {"y", "z"}};
    ordered_json b{{"x", 1}, {"y", "z"}};
    ordered_json c{{"x", 2}, {"y", "z"}};
    CHECK(json_digest(a) == json_digest(b));
    CHECK(json_digest(a) != json_digest(c));
}

TEST_CASE("int128 checked arithmetic") {
    int128 big = checked_pow(2, 126);
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
    CHECK_THROWS_AS(checked_pow(10, 40), OverflowError);
    CHECK(dec_string(-checked_pow(10, 20)) == "-100000000000000000000");
    CHECK_THROWS_AS(parse_int128("12a"), Error);
    CHECK_THROWS_AS(parse_int128(""), Error);
}
