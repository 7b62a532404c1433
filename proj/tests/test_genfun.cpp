#include <doctest.h>

#include "mexpart/genfun.hpp"
#include "mexpart/partition.hpp"
#include "oracles.hpp"

using namespace mexpart;

TEST_CASE("ptt_series small values") {
    QSeries s = ptt_series(2, 6);
    std::vector<int> expected = {1, 1, 1, 2, 3, 4};
    for (std::size_t n = 0; n < 6; ++n) CHECK(s.at(n) == expected[n]);
    CHECK(s.at(5) == 4);

    for (long t : {1L, 3L, 7L}) CHECK(ptt_series(t, 1).at(0) == 1);
    CHECK_THROWS_AS(ptt_series(0, 5), Error);
}

TEST_CASE("ptt_series against the convolution oracle and brute force") {
    auto p = oracles::partition_numbers(40);
    for (long t : {1L, 2L, 3L, 4L, 6L}) {
        QSeries s = ptt_series(t, 41);
        for (int n = 0; n <= 40; ++n) CHECK(s.at(n) == oracles::ptt_by_convolution(t, n, p));
    }
    for (long t : {1L, 2L, 3L}) {
        QSeries s = ptt_series(t, 23);
        for (long n = 0; n <= 22; ++n)
            CHECK(s.at(static_cast<std::size_t>(n)) ==
                  static_cast<int128>(p_direct(n, MexSpec(t, t))));
    }
}

TEST_CASE("parity series equals the reduced exact series") {
    for (long t : {2L, 6L}) {
        CHECK(ptt_parity_series(t, 300) == reduce_mod(ptt_series(t, 300), 2));
    }
    // holds at every t >= 1, not only the density families
    for (long t : {1L, 5L}) {
        CHECK(ptt_parity_series(t, 150) == reduce_mod(ptt_series(t, 150), 2));
    }
    // the same congruence in raw product form: (q^t;q^t)^3/(q;q) mod 2 equals
    // the exact generating function reduced
    for (long t : {2L, 4L, 8L, 6L, 12L}) {
        QSeries lhs = reduce_mod(
            euler_product({{t, 3}, {1, -1}}, 300, Ring::exact()), 2);
        QSeries rhs = reduce_mod(
            mul(inverse(pochhammer_series(1, 300, Ring::exact())),
                triangular_alt_series(t, 300, Ring::exact())),
            2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("parity rules") {
    CHECK(parity_rule_p11(2));   // 2 = 1*(3*1 - 1)
    CHECK(parity_rule_p11(4));   // 4 = 1*(3*1 + 1)
    CHECK(!parity_rule_p11(3));
    CHECK(parity_rule_p33(1));   // 3*1 + 1 = 4
    CHECK(!parity_rule_p33(2));  // 7 is not a square
    CHECK(parity_rule_p33(5));   // 16
    CHECK_THROWS_AS(parity_rule_p11(0), UndefinedStatisticError);

    for (long n = 1; n <= 24; ++n) {
        CHECK(parity_rule_p11(n) == (p_direct(n, MexSpec(1, 1)) % 2 == 1));
        CHECK(parity_rule_p33(n) == (p_direct(n, MexSpec(3, 3)) % 2 == 1));
    }
    QSeries s1 = ptt_series(1, 501);
    QSeries s3 = ptt_series(3, 501);
    for (long n = 1; n <= 500; ++n) {
        CHECK(parity_rule_p11(n) == (s1.at(n) % 2 != 0));
        CHECK(parity_rule_p33(n) == (s3.at(n) % 2 != 0));
    }
}

TEST_CASE("t=1 parity support is the n = k(3k+-1) set") {
    QSeries parity = ptt_parity_series(1, 101);
    for (long n = 1; n <= 100; ++n)
        CHECK((parity.at(static_cast<std::size_t>(n)) != 0) == parity_rule_p11(n));
}

TEST_CASE("density family tagging") {
    for (long t : {2L, 4L, 8L, 6L, 12L, 24L, 48L}) CHECK(is_density_family(t));
    for (long t : {1L, 3L, 5L, 9L, 18L, 7L}) CHECK(!is_density_family(t));
}

TEST_CASE("density_scan") {
    ParityScanReport r0 = density_scan(2, 0);
    CHECK(r0.odd_count == 1);  // p_{2,2}(0) = 1
    CHECK(r0.even_count == 0);
    CHECK(r0.odd_indices == std::vector<long>{0});

    ParityScanReport r = density_scan(2, 400);
    CHECK(r.even_count + r.odd_count == 401);
    CHECK(!r.exploratory);
    CHECK(std::is_sorted(r.odd_indices.begin(), r.odd_indices.end()));
    QSeries parity = ptt_parity_series(2, 401);
    long long odd = 0;
    for (std::size_t n = 0; n <= 400; ++n) odd += parity.at(n) != 0;
    CHECK(r.odd_count == odd);

    CHECK(density_scan(5, 50).exploratory);

    // t=1: the odd indices are 0 and the n = k(3k±1) values
    ParityScanReport r1 = density_scan(1, 100);
    std::vector<long> expected = {0};
    for (long n = 1; n <= 100; ++n)
        if (parity_rule_p11(n)) expected.push_back(n);
    CHECK(r1.odd_indices == expected);

    // the merge is associative: thread count cannot change the report
    ParityScanReport threaded = density_scan(2, 4000, 4);
    ParityScanReport single = density_scan(2, 4000, 1);
    CHECK(threaded.odd_count == single.odd_count);
    CHECK(threaded.odd_indices == single.odd_indices);

    // the even side strictly gains ground between X=200 and X=2000
    long long odd200 = 0;
    for (long n : single.odd_indices) odd200 += n <= 200;
    double ratio200 = static_cast<double>(201 - odd200) / 201.0;
    long long odd2000 = 0;
    for (long n : single.odd_indices) odd2000 += n <= 2000;
    double ratio2000 = static_cast<double>(2001 - odd2000) / 2001.0;
    CHECK(ratio2000 > ratio200);
}

TEST_CASE("series equals brute force at the larger family parameters") {
    for (long t : {16L, 24L}) {
        QSeries s = ptt_series(t, 41);
        for (long n = 0; n <= 40; ++n)
            CHECK(s.at(static_cast<std::size_t>(n)) ==
                  static_cast<int128>(p_direct(n, MexSpec(t, t))));
    }
}
