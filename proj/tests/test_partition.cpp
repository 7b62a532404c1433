#include <doctest.h>

#include "mexpart/genfun.hpp"
#include "mexpart/partition.hpp"
#include "oracles.hpp"

using namespace mexpart;

TEST_CASE("enumeration order and counts") {
    auto parts5 = enumerate_partitions(5);
    REQUIRE(parts5.size() == 7);
    std::vector<std::vector<long>> expected = {
        {5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(parts5[i].parts == expected[i]);

    auto empty = enumerate_partitions(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].parts.empty());
    CHECK(empty[0].weight() == 0);

    CHECK(enumerate_partitions(10).size() == 42);

    // counts match the series inverse of (q;q)_inf
    QSeries p_series = inverse(pochhammer_series(1, 46, Ring::exact()));
    for (long n = 0; n <= 45; ++n) {
        long long count = 0;
        for_each_partition(n, [&](const Partition&) { ++count; });
        CHECK(p_series.at(static_cast<std::size_t>(n)) == static_cast<int128>(count));
    }

    // strictly decreasing lexicographic order (hence distinct)
    for (long n : {8L, 13L}) {
        auto all = enumerate_partitions(n);
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].parts > all[i].parts);
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_partitions(11, 10), LimitExceededError);
    CHECK_THROWS_AS(enumerate_partitions(-1), Error);
}

TEST_CASE("mex worked rows") {
    MexSpec spec(2, 2);
    CHECK(mex(Partition{{4, 1}}, spec) == 2);
    CHECK(mex(Partition{{3, 2}}, spec) == 4);
    CHECK(mex(Partition{}, spec) == 2);
    CHECK(mex(Partition{}, MexSpec(7, 3)) == 3);
    CHECK_THROWS_AS(MexSpec(2, 3), Error);
    CHECK_THROWS_AS(MexSpec(2, 0), Error);
}

TEST_CASE("mex is the least excluded member of its class") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> pick_n(0, 24), pick_A(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        long n = pick_n(rng);
        long A = pick_A(rng);
        std::uniform_int_distribution<long> pick_a(1, A);
        MexSpec spec(A, pick_a(rng));
        for_each_partition(n, [&](const Partition& lambda) {
            long m = mex(lambda, spec);
            CHECK((m - spec.residue) % spec.modulus == 0);
            for (long p : lambda.parts) CHECK(p != m);
            for (long smaller = spec.residue; smaller < m; smaller += spec.modulus) {
                bool found = false;
                for (long p : lambda.parts) found = found || p == smaller;
                CHECK(found);
            }
        });
    }
}

TEST_CASE("the seven partitions of 5 and p_{2,2}(5)") {
    // full mex table at n = 5, A = a = 2
    std::vector<std::pair<std::vector<long>, long>> table = {
        {{5}, 2},          {{4, 1}, 2},       {{3, 2}, 4},          {{3, 1, 1}, 2},
        {{2, 2, 1}, 4},    {{2, 1, 1, 1}, 4}, {{1, 1, 1, 1, 1}, 2}};
    auto parts = enumerate_partitions(5);
    REQUIRE(parts.size() == table.size());
    MexSpec spec(2, 2);
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(parts[i].parts == table[i].first);
        CHECK(mex(parts[i], spec) == table[i].second);
    }
    CHECK(p_direct(5, spec) == 4);
}

TEST_CASE("p_direct basics") {
    for (long t : {1L, 2L, 5L, 9L}) CHECK(p_direct(0, MexSpec(t, t)) == 1);
    // against the convolution oracle
    auto p = oracles::partition_numbers(30);
    for (long t : {1L, 2L, 3L}) {
        for (int n = 0; n <= 18; ++n) {
            CHECK(static_cast<int128>(p_direct(n, MexSpec(t, t))) ==
                  oracles::ptt_by_convolution(t, n, p));
        }
    }
    CHECK(static_cast<int128>(p_direct(10, MexSpec(2, 2))) ==
          ptt_series(2, 11).at(10));
}

TEST_CASE("rank and crank") {
    CHECK(rank(Partition{{4, 1}}) == 2);
    CHECK(rank(Partition{{9}}) == 8);
    CHECK(rank(Partition{{1, 1, 1, 1, 1}}) == -4);
    CHECK(crank(Partition{{5}}) == 5);
    CHECK(crank(Partition{{3, 1, 1}}) == -1);
    CHECK(crank(Partition{{2, 2, 1}}) == 1);
    CHECK_THROWS_AS(rank(Partition{}), UndefinedStatisticError);
    CHECK_THROWS_AS(crank(Partition{}), UndefinedStatisticError);

    // the crank census of the partitions of 5: 5, 0, 3, -1, 1, -3, -5
    std::vector<long> cranks;
    for_each_partition(5, [&](const Partition& p) { cranks.push_back(crank(p)); });
    CHECK(cranks == std::vector<long>{5, 0, 3, -1, 1, -3, -5});
}

TEST_CASE("crank and rank counts meet the mex counts") {
    CHECK(count_crank_nonneg(5) == 4);
    CHECK(count_rank_ge(5, -1) == 5);
    CHECK(count_rank_ge(5, -6) == 7);  // bound below every rank counts everything
    CHECK_THROWS_AS(count_crank_nonneg(0), UndefinedStatisticError);
    for (long n = 1; n <= 24; ++n) {
        CHECK(p_direct(n, MexSpec(1, 1)) == count_crank_nonneg(n));
        CHECK(p_direct(n, MexSpec(3, 3)) == count_rank_ge(n, -1));
    }
}
