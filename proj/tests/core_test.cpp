// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "ngramsim/core.hpp"
#include "oracle.hpp"

using namespace ngramsim;

namespace {

Text t(std::string_view s) { return ascii_text(s); }

std::u32string u(const Text& w) { return std::u32string(w.begin(), w.end()); }

Text random_text(std::mt19937_64& rng, std::size_t max_len, int sigma) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, sigma - 1);
    std::vector<char32_t> out(len(rng));
    for (auto& c : out) c = U'a' + static_cast<char32_t>(letter(rng));
    return Text(std::move(out));
}

}  // namespace

TEST_CASE("text slices are half-open") {
    const Text w = t("abcde");
    CHECK(w.slice(1, 3).size() == 2);
    CHECK(w.slice(1, 3)[0] == U'b');
    CHECK(w.slice(2, 2).empty());
    CHECK(w.suffix(5).empty());
    CHECK(w.suffix(3).size() == 2);
    CHECK_THROWS_AS((void)w.slice(3, 2), PreconditionViolation);
    CHECK_THROWS_AS((void)w.slice(0, 6), PreconditionViolation);
    CHECK_THROWS_AS((void)w.at(5), PreconditionViolation);
}

TEST_CASE("h: window occurrence indicator") {
    CHECK(h(t("abc"), t("abd"), 2, 0) == 1);
    CHECK(h(t("abc"), t("abd"), 1, 2) == 0);
    CHECK(h(t("abc"), t("abc"), 3, 0) == 1);

    CHECK_THROWS_AS(h(t("abc"), t("abd"), 0, 0), PreconditionViolation);
    CHECK_THROWS_AS(h(t("abc"), t("abd"), 4, 0), PreconditionViolation);
    CHECK_THROWS_AS(h(t("abc"), t("abd"), 2, 2), PreconditionViolation);
    CHECK(h(t("abc"), t(""), 1, 0) == 0);
}

TEST_CASE("h is prefix closed") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Text w1 = random_text(rng, 12, 3);
        const Text w2 = random_text(rng, 12, 3);
        for (std::size_t j = 0; j < w1.size(); ++j) {
            for (std::size_t i = 1; i + j <= w1.size(); ++i) {
                if (h(w1, w2, i, j) == 1) {
                    for (std::size_t y = 1; y < i; ++y) REQUIRE(h(w1, w2, y, j) == 1);
                }
            }
        }
    }
}

TEST_CASE("maxlen") {
    CHECK(maxlen(t("abcab"), t("abc"), 0) == 3);
    CHECK(maxlen(t("abcab"), t("abc"), 2) == 1);
    CHECK(maxlen(t("abc"), t("xyz"), 1) == 0);
    CHECK(maxlen(t("abc"), t(""), 0) == 0);
    CHECK_THROWS_AS(maxlen(t("abc"), t("abc"), 3), PreconditionViolation);
    CHECK_THROWS_AS(maxlen(t(""), t("abc"), 0), PreconditionViolation);
}

TEST_CASE("simlen") {
    CHECK(simlen(t("abc"), t("abd"), 3, 0) == 2);
    CHECK(simlen(t("abc"), t("abd"), 0, 1) == 0);
    CHECK(simlen(t("abc"), t("abd"), 3, 2) == 0);
    // p_1 = "c"
    CHECK(simlen(t("abc"), t("xc"), 1, 1) == 1);
    // capped by the remaining length of w2
    CHECK(simlen(t("aaa"), t("aa"), 3, 0) == 2);

    CHECK_THROWS_AS(simlen(t("abc"), t("abd"), 4, 0), PreconditionViolation);
    CHECK_THROWS_AS(simlen(t("abc"), t("abd"), 1, 3), PreconditionViolation);
    CHECK(simlen(t("abc"), t("abd"), 0, 99) == 0);
}

TEST_CASE("simlen satisfies its one-step recurrence and matches a direct prefix scan") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Text w1 = random_text(rng, 10, 2);
        const Text w2 = random_text(rng, 10, 2);
        const auto a = u(w1);
        const auto b = u(w2);
        for (std::size_t n = 1; n <= w1.size(); ++n) {
            for (std::size_t l = 0; l < w2.size(); ++l) {
                const std::size_t value = simlen(w1, w2, n, l);
                const auto p = std::u32string_view(a).substr(a.size() - n);
                REQUIRE(value == oracle::lcp(p, std::u32string_view(b).substr(l)));
                if (p[0] != b[l]) {
                    REQUIRE(value == 0);
                } else {
                    const std::size_t next = (l + 1 < w2.size()) ? simlen(w1, w2, n - 1, l + 1) : 0;
                    REQUIRE(value == 1 + next);
                }
            }
        }
    }
}

TEST_CASE("simlen_max") {
    CHECK(simlen_max(t("abcab"), t("abc"), 5) == 3);
    CHECK(simlen_max(t("abcab"), t("abc"), 2) == 2);
    CHECK(simlen_max(t("abc"), t("xyz"), 2) == 0);
    CHECK(simlen_max(t("abc"), t(""), 2) == 0);
    CHECK_THROWS_AS(simlen_max(t("abc"), t("abc"), 0), PreconditionViolation);
    CHECK_THROWS_AS(simlen_max(t("abc"), t("abc"), 4), PreconditionViolation);
}

TEST_CASE("scf kernels on worked examples") {
    for (bool exhaustive : {false, true}) {
        CHECK(scf_naive(t("ab"), t("b"), exhaustive) == 1);
        CHECK(scf_naive(t("abc"), t("abd"), exhaustive) == 3);
        CHECK(scf_naive(t("abc"), t("abc"), exhaustive) == 6);
    }
    CHECK(scf_patsearch(t("abc"), t("abd")) == 3);
    CHECK(scf_patsearch(t(""), t("abc")) == 0);
    CHECK(scf_patsearch(t("abcab"), t("abc")) == 9);
    CHECK(scf_dynamic(t("ab"), t("b")) == 1);
    CHECK(scf_dynamic(t("abcab"), t("abc")) == 9);
    CHECK(scf_dynamic(t(""), t("")) == 0);
}

TEST_CASE("comparison counts of the worked examples") {
    ComparisonCounter naive;
    scf_naive(t("aa"), t("aa"), true, naive);
    CHECK(naive.count() == 6);

    ComparisonCounter dynamic;
    CHECK(scf_dynamic(t("ab"), t("b"), dynamic) == 1);
    CHECK(dynamic.count() == 2);

    ComparisonCounter none;
    scf_patsearch(t(""), t("abc"), none);
    CHECK(none.count() == 0);
}

TEST_CASE("naive early exit does fewer comparisons than exhaustive on repetitive input") {
    ComparisonCounter early, full;
    const Text w = t("aaaa");
    CHECK(scf_naive(w, w, false, early) == scf_naive(w, w, true, full));
    CHECK(early.count() < full.count());
}

TEST_CASE("counter overflow is reported, not wrapped") {
    ComparisonCounter near_max(std::numeric_limits<std::uint64_t>::max() - 1);
    CHECK_THROWS_AS(scf_dynamic(t("ab"), t("ab"), near_max), CounterOverflow);
    ComparisonCounter also(std::numeric_limits<std::uint64_t>::max());
    CHECK_THROWS_AS(scf_naive(t("a"), t("a"), true, also), CounterOverflow);
    ComparisonCounter third(std::numeric_limits<std::uint64_t>::max());
    CHECK_THROWS_AS(scf_patsearch(t("a"), t("a"), third), CounterOverflow);
}

TEST_CASE("dynamic rows hold simlen and keep the sentinel at zero") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Text w1 = random_text(rng, 9, 3);
        const Text w2 = random_text(rng, 9, 3);
        std::size_t rows = 0;
        NullCounter none;
        scf_dynamic(w1, w2, none, [&](std::size_t n, const SimlenTable& table) {
            ++rows;
            REQUIRE(n == rows);
            REQUIRE(table.columns() == w2.size());
            REQUIRE(table[w2.size()] == 0);
            for (std::size_t l = 0; l < w2.size(); ++l) REQUIRE(table[l] == simlen(w1, w2, n, l));
        });
        CHECK(rows == w1.size());
    }
}

TEST_CASE("all kernels agree with the brute-force oracle on random words") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<int> sigma(1, 5);
        const int k = sigma(rng);
        const Text w1 = random_text(rng, 16, k);
        const Text w2 = random_text(rng, 16, k);
        const auto expected = oracle::scf(u(w1), u(w2));
        REQUIRE(scf_dynamic(w1, w2) == expected);
        REQUIRE(scf_patsearch(w1, w2) == expected);
        REQUIRE(scf_naive(w1, w2, false) == expected);
        REQUIRE(scf_naive(w1, w2, true) == expected);
        REQUIRE(expected <= w1.size() * (w1.size() + 1) / 2);
    }
}

TEST_CASE("sum and equivalence identities") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Text w1 = random_text(rng, 14, 3);
        const Text w2 = random_text(rng, 14, 3);
        ScfCount total = 0;
        for (std::size_t j = 0; j < w1.size(); ++j) {
            total += maxlen(w1, w2, j);
            REQUIRE(maxlen(w1, w2, j) == oracle::maxlen(u(w1), u(w2), j));
        }
        REQUIRE(total == scf_dynamic(w1, w2));
        for (std::size_t n = 1; n <= w1.size(); ++n) {
            REQUIRE(simlen_max(w1, w2, n) == maxlen(w1, w2, w1.size() - n));
        }
    }
}

TEST_CASE("kernels are generic over the symbol type") {
    const std::vector<int> w1{1, 2, 3, 1, 2};
    const std::vector<int> w2{1, 2, 3};
    CHECK(scf_dynamic(w1, w2) == 9);
    CHECK(scf_patsearch(w1, w2) == 9);
    CHECK(scf_naive(w1, w2) == 9);
    const std::string b1 = "abcab";
    const std::string b2 = "abc";
    CHECK(scf_dynamic(b1, b2) == 9);
    CHECK(similarity(b1, b2) == SimilarityScore(6, 15));
}

TEST_CASE("sim") {
    CHECK(sim(t("abc"), t("abd")).identical(SimilarityScore(3, 6)));
    CHECK(sim(t("ab"), t("b")).identical(SimilarityScore(1, 3)));
    CHECK(sim(t("abc"), t("abc")) == SimilarityScore(1, 1));
    CHECK(sim(t(""), t("abc")) == SimilarityScore(0, 1));
    CHECK_THROWS_AS(sim(t(""), t("")), std::domain_error);
    // not symmetric
    CHECK(sim(t("abcab"), t("abc")) != sim(t("abc"), t("abcab")));
}

TEST_CASE("similarity") {
    CHECK(similarity(t("abcd"), t("bc")) == SimilarityScore(6, 20));
    CHECK(similarity(t("abcd"), t("bc")).identical(SimilarityScore(3, 10)));
    CHECK(similarity(t("abc"), t("abd")) == SimilarityScore(1, 2));
    CHECK(similarity(t("xyz"), t("xyz")) == SimilarityScore(1, 1));
    CHECK(similarity(t(""), t("abc")) == SimilarityScore(0, 1));
    CHECK(similarity(t("abc"), t("")) == SimilarityScore(0, 1));
    CHECK(similarity(t(""), t("")) == SimilarityScore(1, 1));
    for (Algorithm algo : {Algorithm::dynamic, Algorithm::naive, Algorithm::patsearch}) {
        CHECK(similarity(t("ab"), t("ba"), algo).identical(SimilarityScore(2, 3)));
    }

    ComparisonCounter counter;
    similarity(t("abcd"), t("bc"), Algorithm::dynamic, counter);
    CHECK(counter.count() == 16);
}

TEST_CASE("algorithm names round-trip") {
    for (Algorithm algo : {Algorithm::dynamic, Algorithm::naive, Algorithm::patsearch}) {
        CHECK(parse_algorithm(to_string(algo)) == algo);
    }
    CHECK_FALSE(parse_algorithm("fast").has_value());
}
