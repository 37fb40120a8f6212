// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <sstream>

#include "ngramsim/errors.hpp"
#include "ngramsim/score.hpp"

using ngramsim::SimilarityScore;

TEST_CASE("construction rejects invalid fractions") {
    CHECK_THROWS_AS(SimilarityScore(1, 0), std::domain_error);
    CHECK_THROWS_AS(SimilarityScore(4, 3), std::domain_error);
    CHECK_NOTHROW(SimilarityScore(0, 1));
    CHECK_THROWS_AS(SimilarityScore::from_count(0, 0), std::domain_error);
    CHECK(SimilarityScore::from_count(3, 4).identical(SimilarityScore(3, 10)));
}

TEST_CASE("ordering is exact") {
    CHECK(SimilarityScore(3, 6) == SimilarityScore(1, 2));
    CHECK_FALSE(SimilarityScore(3, 6).identical(SimilarityScore(1, 2)));
    CHECK(SimilarityScore(1, 3) < SimilarityScore(1, 2));
    CHECK(SimilarityScore(0, 10) == SimilarityScore(0, 1));

    // 1 - 1/d for two huge denominators: doubles cannot tell them apart.
    const std::uint64_t d = (1ULL << 62) + 1;
    const SimilarityScore x(d - 1, d);
    const SimilarityScore y(d, d + 1);
    CHECK(x.as_float() == y.as_float());
    CHECK(x < y);
}

TEST_CASE("ordering agrees with exact rational comparison on random fractions") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint64_t> den(1, 1000);
    for (int k = 0; k < 2000; ++k) {
        const auto d1 = den(rng), d2 = den(rng);
        const auto n1 = std::uniform_int_distribution<std::uint64_t>(0, d1)(rng);
        const auto n2 = std::uniform_int_distribution<std::uint64_t>(0, d2)(rng);
        const SimilarityScore a(n1, d1), b(n2, d2);
        REQUIRE((a < b) == (n1 * d2 < n2 * d1));
        REQUIRE((a == b) == (n1 * d2 == n2 * d1));
    }
}

TEST_CASE("decimal rendering rounds half to even from the exact value") {
    CHECK(SimilarityScore(1, 2).to_decimal() == "0.500000");
    CHECK(SimilarityScore(6, 6).to_decimal() == "1.000000");
    CHECK(SimilarityScore(1, 3).to_decimal() == "0.333333");
    CHECK(SimilarityScore(2, 3).to_decimal() == "0.666667");
    CHECK(SimilarityScore(0, 3).to_decimal(2) == "0.00");
    CHECK(SimilarityScore(1, 8).to_decimal(2) == "0.12");  // 0.125 -> even
    CHECK(SimilarityScore(3, 8).to_decimal(2) == "0.38");  // 0.375 -> even
    CHECK(SimilarityScore(1, 2).to_decimal(0) == "0");
    CHECK(SimilarityScore(3, 4).to_decimal(0) == "1");
    CHECK(SimilarityScore(1, 1).to_decimal(0) == "1");
    CHECK(SimilarityScore(1, 7).to_decimal(18) == "0.142857142857142857");
    CHECK_THROWS_AS((void)SimilarityScore(1, 2).to_decimal(19), std::invalid_argument);
    CHECK_THROWS_AS((void)SimilarityScore(1, 2).to_decimal(-1), std::invalid_argument);
}

TEST_CASE("fraction rendering") {
    CHECK(SimilarityScore(3, 6).to_fraction() == "3/6");
    std::ostringstream os;
    os << SimilarityScore(1, 3);
    CHECK(os.str() == "1/3");
}

TEST_CASE("substring count") {
    CHECK(ngramsim::substring_count(0) == 0);
    CHECK(ngramsim::substring_count(4) == 10);
    CHECK_THROWS_AS(ngramsim::substring_count(1ULL << 40 << 20), ngramsim::CounterOverflow);
}
