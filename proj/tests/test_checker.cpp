#include "semicomplete/checker.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace semicomplete;

TEST_CASE("per-j verdicts match the worked cases") {
    // Odd numerators at j=5: G = 5, k ranges over 1..4, all reachable.
    JVerdict odds = check_at_j(arithmetic_prefix({1, 2}, 5), 5);
    CHECK(odds.G == Rational(5));
    CHECK(odds.k_max == 4);
    CHECK(odds.passed());

    JVerdict bad = check_at_j(NumeratorSet({3, 4, 5}), 3);
    CHECK(bad.G == Rational(4));
    CHECK(bad.failures == std::vector<std::uint64_t>{2});  // 6 unreachable; 3 and 9 fine
    CHECK(!bad.passed());

    JVerdict constant = check_at_j(NumeratorSet({3, 3, 3, 3}), 4);
    CHECK(constant.failures.front() == 1);

    CHECK_THROWS_AS(check_at_j(NumeratorSet({1, 2}), 2), std::domain_error);
    JVerdict explored = check_at_j(NumeratorSet({1, 2}), 2, false, true);
    CHECK(explored.out_of_definition);
}

TEST_CASE("witness extraction covers every passing k") {
    JVerdict v = check_at_j(arithmetic_prefix({1, 2}, 6), 6, true);
    REQUIRE(v.passed());
    CHECK(v.witnesses.size() == v.k_max);
    NumeratorSet values = arithmetic_prefix({1, 2}, 6);
    for (const auto& [k, w] : v.witnesses) {
        CHECK(w.target == k * 6);
        CHECK(w.validates(values));
    }
}

TEST_CASE("horizon scans verify or refute") {
    SemicompletenessReport odd = check_arithmetic({1, 2}, 12);
    CHECK(odd.status == Status::verified_up_to_horizon);
    CHECK(odd.verdicts.size() == 10);

    SemicompletenessReport gap3 = check_arithmetic({1, 3}, 12);
    CHECK(gap3.status == Status::refuted);
    REQUIRE(gap3.counterexample.has_value());
    CHECK(gap3.counterexample->j == 3);
    CHECK(gap3.counterexample->k == 1);

    SemicompletenessReport twos = check_arithmetic({2, 0}, 12);
    CHECK(twos.status == Status::refuted);
    CHECK(twos.counterexample->j == 3);
    CHECK(twos.counterexample->k == 1);
    CHECK(!twos.strictly_increasing);

    // {1,1,1,...}: G is identically 1, no k is ever required, and the terms
    // do not strictly increase.
    SemicompletenessReport ones = check_arithmetic({1, 0}, 12);
    CHECK(ones.status == Status::refuted_vacuous);
    CHECK(!ones.counterexample.has_value());
    for (const JVerdict& v : ones.verdicts) CHECK(v.k_max == 0);
}

TEST_CASE("refutations re-validate against exhaustive enumeration") {
    for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{1, 3}, {2, 0}, {3, 1}, {3, 3}, {4, 2}}) {
        SemicompletenessReport r = check_arithmetic({a, b}, 8);
        REQUIRE(r.status == Status::refuted);
        const auto& cex = *r.counterexample;
        NumeratorSet values = arithmetic_prefix({a, b}, cex.j);
        CHECK(!oracle::subset_sum_reachable(values.values(), cex.k * cex.j));
    }
}

TEST_CASE("odd and shifted-consecutive numerators pass every j up to 50") {
    for (unsigned j = 3; j <= 50; ++j) {
        CHECK(check_at_j(arithmetic_prefix({1, 2}, j), j).passed());
        CHECK(check_at_j(arithmetic_prefix({2, 1}, j), j).passed());
        CHECK(check_at_j(arithmetic_prefix({1, 1}, j), j).passed());
    }
}

TEST_CASE("shifted consecutive integers never need the unreachable targets") {
    // For {2,...,j+1} both 1 and sum-1 are unreachable, but (sum-1)/j is
    // never an integer when j > 2, so no k demands either target:
    // (sum-1)/j = j/2 - 1/j + 3/2.
    for (unsigned j = 3; j <= 1000; ++j) {
        const BigInt sum = BigInt(j) * (BigInt(j) + 3) / 2;  // 2+3+...+(j+1)
        Rational ratio(sum - 1, j);
        CHECK(ratio ==
              Rational(j, 2) - Rational(1, j) + Rational(3, 2));
        CHECK(!ratio.is_integer());
    }
}

TEST_CASE("the arithmetic classifier finds exactly the three good cells") {
    auto cells = classify_arithmetic(4, 4, 8);
    unsigned verified = 0;
    for (const auto& [ab, cell] : cells) {
        if (cell.status == Status::verified_up_to_horizon) {
            ++verified;
            const bool expected = (ab == std::make_pair<std::uint64_t, std::uint64_t>(1, 1)) ||
                                  (ab == std::make_pair<std::uint64_t, std::uint64_t>(1, 2)) ||
                                  (ab == std::make_pair<std::uint64_t, std::uint64_t>(2, 1));
            CHECK(expected);
        } else if (cell.status == Status::refuted) {
            REQUIRE(cell.counterexample.has_value());
            CHECK(cell.counterexample->j <= 4);
        }
    }
    CHECK(verified == 3);

    CHECK(cells.at({3, 3}).counterexample->j == 4);
    CHECK(cells.at({3, 3}).counterexample->k == 1);
    CHECK(cells.at({1, 0}).status == Status::refuted_vacuous);
    CHECK(cells.at({2, 1}).status == Status::verified_up_to_horizon);
}

TEST_CASE("brown completeness criterion") {
    CHECK(brown_complete({1, 2, 4, 7, 11}));
    CHECK(!brown_complete({1, 3, 5, 7}));
    CHECK(brown_complete({1, 1, 1}));
    CHECK(!brown_complete({2, 3, 4}));

    for (unsigned M = 1; M <= 4; ++M) {
        std::vector<BigInt> prefix;
        for (unsigned n = 1; n <= 200; ++n) prefix.push_back(cut_number(M, n));
        CHECK(brown_complete(prefix));
    }
    std::vector<BigInt> consecutive;
    for (int n = 1; n <= 200; ++n) consecutive.emplace_back(n);
    CHECK(brown_complete(consecutive));
}

TEST_CASE("induction certificates validate base and tail") {
    InductionCertificate c2 = induction_certificate(2, 4, 10000);
    CHECK(c2.valid());
    CHECK(c2.base_covers_up_to == 14);

    InductionCertificate c3 = induction_certificate(3, 5, 10000);
    CHECK(c3.valid());
    CHECK(c3.base_covers_up_to == 30);

    InductionCertificate c4 = induction_certificate(4, 6, 10000);
    CHECK(c4.valid());

    InductionCertificate c1 = induction_certificate(1, 4, 10000);
    CHECK(c1.valid());

    CHECK_THROWS_AS(induction_certificate(2, 3, 10000), std::domain_error);
    CHECK_THROWS_AS(induction_certificate(4, 5, 10000), std::domain_error);
    CHECK_THROWS_AS(induction_certificate(2, 4, 3), std::domain_error);
    CHECK_THROWS_AS(induction_certificate(5, 7, 10), std::domain_error);
}

TEST_CASE("status names are stable") {
    CHECK(status_name(Status::verified_up_to_horizon) == "verified-up-to-horizon");
    CHECK(status_name(Status::refuted) == "refuted");
    CHECK(status_name(Status::refuted_vacuous) == "refuted-vacuous");
    CHECK(status_name(Status::certified_by_induction) == "certified-by-induction");
}
