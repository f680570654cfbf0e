#include "semicomplete/sequences.hpp"

#include "doctest.h"

#include <vector>

using namespace semicomplete;

TEST_CASE("cut numbers reproduce the known small rows") {
    // M=2: squares under straight cuts.
    const std::vector<int> lazy_caterer = {1, 2, 4, 7, 11};
    for (std::size_t n = 0; n < lazy_caterer.size(); ++n)
        CHECK(cut_number(2, static_cast<unsigned>(n + 1)) == lazy_caterer[n]);

    CHECK(cut_number(1, 7) == 7);
    CHECK(cut_number(3, 5) == 15);
    CHECK(cut_number(4, 6) == 31);

    // M=3: cubes.
    const std::vector<int> cake = {1, 2, 4, 8, 15, 26};
    for (std::size_t n = 0; n < cake.size(); ++n)
        CHECK(cut_number(3, static_cast<unsigned>(n + 1)) == cake[n]);

    CHECK_THROWS_AS(cut_number(0, 3), std::domain_error);
    CHECK_THROWS_AS(cut_number(2, 0), std::domain_error);
}

TEST_CASE("recurrence equals closed forms for all M <= 4, N <= 200") {
    for (unsigned M = 1; M <= 4; ++M)
        for (unsigned N = 1; N <= 200; ++N)
            CHECK(cut_number(M, N) == cut_closed_form(M, N));
    CHECK_THROWS_AS(cut_closed_form(5, 3), std::domain_error);
}

TEST_CASE("closed-form prefix sums equal direct summation") {
    CHECK(prefix_sum(2, 4) == 14);
    CHECK(prefix_sum(2, 5) == 25);
    CHECK(prefix_sum(3, 4) == 15);

    for (unsigned M = 1; M <= 4; ++M) {
        BigInt running = 0;
        for (unsigned t = 1; t <= 1000; ++t) {
            running += cut_number(M, t);
            CHECK(prefix_sum(M, t) == running);
        }
    }
    CHECK(prefix_sum_direct(5, 4) == BigInt(1) + 2 + 4 + 8);  // any M via summation
    CHECK_THROWS_AS(prefix_sum(5, 4), std::domain_error);
}

TEST_CASE("tail dominance thresholds are sharp") {
    CHECK(tail_dominates(2, 4));
    CHECK(!tail_dominates(2, 3));
    CHECK(tail_dominates(4, 6));

    const unsigned sharp[] = {0, 0, 3, 4, 5};  // first false t per dimension (M >= 2)
    for (unsigned M = 2; M <= 4; ++M) {
        CHECK(!tail_dominates(M, sharp[M]));
        for (unsigned t = sharp[M] + 1; t <= 300; ++t) CHECK(tail_dominates(M, t));
    }
    CHECK_THROWS_AS(tail_dominates(5, 10), std::domain_error);
}

TEST_CASE("cut numbers grow in N and in M") {
    for (unsigned M = 1; M <= 6; ++M)
        for (unsigned N = 2; N <= 60; ++N) {
            CHECK(cut_number(M, N) > cut_number(M, N - 1));
            if (M > 1) CHECK(cut_number(M, N) >= cut_number(M - 1, N));
        }
}

TEST_CASE("arithmetic prefixes enumerate a, a+b, ...") {
    NumeratorSet odds = arithmetic_prefix({1, 2}, 3);
    CHECK(odds.values() == std::vector<std::uint64_t>{1, 3, 5});
    CHECK(odds.strictly_increasing());

    NumeratorSet shifted = arithmetic_prefix({2, 1}, 4);
    CHECK(shifted.values() == std::vector<std::uint64_t>{2, 3, 4, 5});

    NumeratorSet constant = arithmetic_prefix({3, 0}, 4);
    CHECK(constant.values() == std::vector<std::uint64_t>{3, 3, 3, 3});
    CHECK(!constant.strictly_increasing());

    CHECK_THROWS_AS(arithmetic_prefix({0, 1}, 3), std::domain_error);
}

TEST_CASE("cut prefixes feed the partition engine") {
    NumeratorSet caterer = cut_prefix(2, 5);
    CHECK(caterer.values() == std::vector<std::uint64_t>{1, 2, 4, 7, 11});
    CHECK(caterer.strictly_increasing());
    CHECK(caterer.sum() == 25);
}
