// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Kernels of the generalized n-gram similarity measure.
//
// scf(w1, w2) is the number of (not necessarily distinct) substrings of w1,
// counted per (length, start) pair, that occur somewhere in w2. The measure is
//
//     sim(w1, w2)        = scf(w1, w2) / (N(N+1)/2),  N = max(|w1|, |w2|)
//     similarity(w1, w2) = min(sim(w1, w2), sim(w2, w1))
//
// Three interchangeable scf kernels are provided: a naive window-by-alignment
// scan, a per-window linear pattern search, and the rolling-array dynamic
// program. Every kernel takes a tally and calls tick() once per symbol-equality
// test, which is what the complexity module verifies.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "ngramsim/counter.hpp"
#include "ngramsim/errors.hpp"
#include "ngramsim/score.hpp"
#include "ngramsim/text.hpp"

namespace ngramsim {

using ScfCount = std::uint64_t;

enum class Algorithm { dynamic, naive, patsearch };

constexpr std::string_view to_string(Algorithm algo) noexcept {
    switch (algo) {
        case Algorithm::dynamic: return "dynamic";
        case Algorithm::naive: return "naive";
        case Algorithm::patsearch: return "patsearch";
    }
    return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "dynamic") return Algorithm::dynamic;
    if (name == "naive") return Algorithm::naive;
    if (name == "patsearch") return Algorithm::patsearch;
    return std::nullopt;
}

template <class W>
concept Word = std::ranges::contiguous_range<const W> && std::ranges::sized_range<const W> &&
               Symbol<std::ranges::range_value_t<const W>>;

template <Word W>
using symbol_of = std::remove_cv_t<std::ranges::range_value_t<const W>>;

template <class W1, class W2>
concept WordPair = Word<W1> && Word<W2> && std::same_as<symbol_of<W1>, symbol_of<W2>>;

template <Word W>
std::span<const symbol_of<W>> as_span(const W& w) noexcept {
    return {std::ranges::data(w), std::ranges::size(w)};
}

namespace detail {

[[noreturn]] inline void precondition(const std::string& what) { throw PreconditionViolation(what); }

// True iff `pattern` occurs contiguously in `haystack`, by direct window scan.
template <class S>
bool occurs(std::span<const S> pattern, std::span<const S> haystack) {
    if (pattern.size() > haystack.size()) return false;
    for (std::size_t x = 0; x + pattern.size() <= haystack.size(); ++x) {
        if (std::equal(pattern.begin(), pattern.end(), haystack.begin() + static_cast<std::ptrdiff_t>(x))) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Indicator that the length-i window of w1 starting at j occurs in w2.
/// Requires 1 <= i <= |w1| and j <= |w1| - i. Direct scan; use it as a reference,
/// not on a hot path.
template <class W1, class W2>
    requires WordPair<W1, W2>
int h(const W1& w1, const W2& w2, std::size_t i, std::size_t j) {
    const auto a = as_span(w1);
    if (i < 1 || i > a.size() || j > a.size() - i) {
        detail::precondition("h(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ") outside the windows of a word of length " +
                             std::to_string(a.size()));
    }
    return detail::occurs(a.subspan(j, i), as_span(w2)) ? 1 : 0;
}

/// Length of the longest prefix of w1[j..) occurring in w2. Requires j < |w1|.
///
/// Grows the window while h stays 1; windows are prefix closed, so the first 0
/// ends the run.
template <class W1, class W2>
    requires WordPair<W1, W2>
std::size_t maxlen(const W1& w1, const W2& w2, std::size_t j) {
    const std::size_t a = std::ranges::size(w1);
    if (j >= a) {
        detail::precondition("maxlen(j=" + std::to_string(j) + ") requires j < " + std::to_string(a));
    }
    const std::size_t limit = std::min(a - j, std::ranges::size(w2));
    std::size_t i = 0;
    while (i < limit && h(w1, w2, i + 1, j) == 1) ++i;
    return i;
}

/// Longest common prefix of the suffix p_n = w1[|w1|-n..) and w2[l..).
///
/// Requires n <= |w1| and l < |w2|; simlen(n = 0, l) is 0 for any l.
template <class W1, class W2>
    requires WordPair<W1, W2>
std::size_t simlen(const W1& w1, const W2& w2, std::size_t n, std::size_t l) {
    const auto a = as_span(w1);
    const auto b = as_span(w2);
    if (n > a.size()) {
        detail::precondition("simlen(n=" + std::to_string(n) + ") requires n <= " + std::to_string(a.size()));
    }
    if (n == 0) return 0;
    if (l >= b.size()) {
        detail::precondition("simlen(l=" + std::to_string(l) + ") requires l < " + std::to_string(b.size()));
    }
    const auto p = a.subspan(a.size() - n);
    const auto rest = b.subspan(l);
    const std::size_t cap = std::min(p.size(), rest.size());
    std::size_t x = 0;
    while (x < cap && p[x] == rest[x]) ++x;
    return x;
}

/// max over l of simlen(n, l): the longest prefix of p_n occurring in w2.
/// Requires 1 <= n <= |w1|. Returns 0 for an empty w2.
template <class W1, class W2>
    requires WordPair<W1, W2>
std::size_t simlen_max(const W1& w1, const W2& w2, std::size_t n) {
    const std::size_t a = std::ranges::size(w1);
    if (n < 1 || n > a) {
        detail::precondition("simlen_max(n=" + std::to_string(n) + ") requires 1 <= n <= " + std::to_string(a));
    }
    std::size_t best = 0;
    for (std::size_t l = 0; l < std::ranges::size(w2); ++l) {
        best = std::max(best, simlen(w1, w2, n, l));
    }
    return best;
}

/// scf by testing every (length, start) window of w1 against every alignment in w2.
///
/// With `exhaustive` false, the alignment scan for a window stops at its first
/// occurrence. With `exhaustive` true every alignment is compared up to its first
/// mismatch or full length, which on all-equal-symbol inputs performs exactly
/// sum_{i=1}^{min(a,b)} (a-i+1)(b-i+1)i comparisons. The result is the same in
/// both modes.
template <class W1, class W2, ComparisonTally C = NullCounter>
    requires WordPair<W1, W2>
ScfCount scf_naive(const W1& w1, const W2& w2, bool exhaustive, C& counter) {
    const auto a = as_span(w1);
    const auto b = as_span(w2);
    const std::size_t shorter = std::min(a.size(), b.size());
    ScfCount result = 0;
    for (std::size_t i = 1; i <= shorter; ++i) {
        for (std::size_t j = 0; j + i <= a.size(); ++j) {
            bool found = false;
            for (std::size_t x = 0; x + i <= b.size(); ++x) {
                std::size_t k = 0;
                for (; k < i; ++k) {
                    counter.tick();
                    if (!(a[j + k] == b[x + k])) break;
                }
                if (k == i) {
                    found = true;
                    if (!exhaustive) break;
                }
            }
            if (found) ++result;
        }
    }
    return result;
}

template <class W1, class W2>
    requires WordPair<W1, W2>
ScfCount scf_naive(const W1& w1, const W2& w2, bool exhaustive = false) {
    NullCounter none;
    return scf_naive(w1, w2, exhaustive, none);
}

namespace detail {

// Knuth-Morris-Pratt failure table: fail[q] is the length of the longest proper
// border of pattern[0..q].
template <class S, ComparisonTally C>
std::vector<std::size_t> failure_function(std::span<const S> pattern, C& counter) {
    std::vector<std::size_t> fail(pattern.size(), 0);
    std::size_t border = 0;
    for (std::size_t q = 1; q < pattern.size(); ++q) {
        for (;;) {
            counter.tick();
            if (pattern[q] == pattern[border]) {
                ++border;
                break;
            }
            if (border == 0) break;
            border = fail[border - 1];
        }
        fail[q] = border;
    }
    return fail;
}

template <class S, ComparisonTally C>
bool kmp_occurs(std::span<const S> pattern, std::span<const S> text, const std::vector<std::size_t>& fail,
                C& counter) {
    if (pattern.empty()) return true;
    std::size_t matched = 0;
    for (std::size_t t = 0; t < text.size(); ++t) {
        for (;;) {
            counter.tick();
            if (text[t] == pattern[matched]) {
                ++matched;
                break;
            }
            if (matched == 0) break;
            matched = fail[matched - 1];
        }
        if (matched == pattern.size()) return true;
    }
    return false;
}

}  // namespace detail

/// scf by a linear-time pattern search (Knuth-Morris-Pratt) per window of w1.
/// Failure-table construction comparisons are counted as well as search ones.
template <class W1, class W2, ComparisonTally C = NullCounter>
    requires WordPair<W1, W2>
ScfCount scf_patsearch(const W1& w1, const W2& w2, C& counter) {
    const auto a = as_span(w1);
    const auto b = as_span(w2);
    const std::size_t shorter = std::min(a.size(), b.size());
    ScfCount result = 0;
    for (std::size_t i = 1; i <= shorter; ++i) {
        for (std::size_t j = 0; j + i <= a.size(); ++j) {
            const auto window = a.subspan(j, i);
            const auto fail = detail::failure_function(window, counter);
            if (detail::kmp_occurs(window, b, fail, counter)) ++result;
        }
    }
    return result;
}

template <class W1, class W2>
    requires WordPair<W1, W2>
ScfCount scf_patsearch(const W1& w1, const W2& w2) {
    NullCounter none;
    return scf_patsearch(w1, w2, none);
}

/// The rolling simlen row used by the dynamic kernel.
///
/// Holds |w2|+1 entries. Entry |w2| is a sentinel that is never written and stays
/// 0; after `advance` has been applied for the suffix p_n, entry l equals
/// simlen(w1, w2, n, l).
class SimlenTable {
  public:
    explicit SimlenTable(std::size_t columns) : entries_(columns + 1, 0) {}

    std::size_t columns() const noexcept { return entries_.size() - 1; }
    std::span<const std::size_t> entries() const noexcept { return entries_; }
    std::size_t operator[](std::size_t l) const noexcept { return entries_[l]; }

    /// Turns the row for p_{n-1} into the row for p_n, where `first` = p_n[0].
    /// Returns the row maximum, simlen_max(n).
    template <class S, ComparisonTally C>
    std::size_t advance(std::span<const S> w2, const S& first, C& counter) {
        std::size_t max = 0;
        std::size_t s = 0;
        // Left to right: simlen[s + 1] still holds the previous row when simlen[s] is written.
        for (std::size_t b = 0; b < w2.size(); ++b) {
            counter.tick();
            if (w2[b] == first) {
                entries_[s] = entries_[s + 1] + 1;
                if (entries_[s] > max) max = entries_[s];
            } else {
                entries_[s] = 0;
            }
            ++s;
        }
        return max;
    }

  private:
    std::vector<std::size_t> entries_;
};

struct NoRowObserver {
    void operator()(std::size_t /*n*/, const SimlenTable& /*table*/) const noexcept {}
};

/// scf by the rolling-array dynamic program: suffixes p_1, p_2, ... of w1 are
/// processed in turn, one simlen row each, and the row maxima are summed.
/// Performs exactly |w1|*|w2| comparisons using |w2|+1 words of extra memory.
///
/// `on_row(n, table)` is called after the row for p_n is complete.
template <class W1, class W2, ComparisonTally C, class Observer>
    requires WordPair<W1, W2>
ScfCount scf_dynamic(const W1& w1, const W2& w2, C& counter, Observer&& on_row) {
    const auto a = as_span(w1);
    const auto b = as_span(w2);
    SimlenTable table(b.size());
    ScfCount result = 0;
    std::size_t alast = a.size();
    while (alast != 0) {
        --alast;
        result += table.advance(b, a[alast], counter);
        on_row(a.size() - alast, std::as_const(table));
    }
    return result;
}

template <class W1, class W2, ComparisonTally C>
    requires WordPair<W1, W2>
ScfCount scf_dynamic(const W1& w1, const W2& w2, C& counter) {
    return scf_dynamic(w1, w2, counter, NoRowObserver{});
}

template <class W1, class W2>
    requires WordPair<W1, W2>
ScfCount scf_dynamic(const W1& w1, const W2& w2) {
    NullCounter none;
    return scf_dynamic(w1, w2, none);
}

/// Dispatch to the selected kernel. `exhaustive` only affects Algorithm::naive.
template <class W1, class W2, ComparisonTally C>
    requires WordPair<W1, W2>
ScfCount scf(const W1& w1, const W2& w2, Algorithm algo, C& counter, bool exhaustive = false) {
    switch (algo) {
        case Algorithm::naive: return scf_naive(w1, w2, exhaustive, counter);
        case Algorithm::patsearch: return scf_patsearch(w1, w2, counter);
        case Algorithm::dynamic: break;
    }
    return scf_dynamic(w1, w2, counter);
}

template <class W1, class W2>
    requires WordPair<W1, W2>
ScfCount scf(const W1& w1, const W2& w2, Algorithm algo = Algorithm::dynamic) {
    NullCounter none;
    return scf(w1, w2, algo, none);
}

/// Directional measure scf(w1, w2) / (N(N+1)/2). Not symmetric.
/// Throws std::domain_error when both words are empty.
template <class W1, class W2, ComparisonTally C>
    requires WordPair<W1, W2>
SimilarityScore sim(const W1& w1, const W2& w2, Algorithm algo, C& counter) {
    const std::size_t longer = std::max(std::ranges::size(w1), std::ranges::size(w2));
    if (longer == 0) {
        throw std::domain_error("sim is undefined for two empty words");
    }
    return SimilarityScore::from_count(scf(w1, w2, algo, counter), longer);
}

template <class W1, class W2>
    requires WordPair<W1, W2>
SimilarityScore sim(const W1& w1, const W2& w2, Algorithm algo = Algorithm::dynamic) {
    NullCounter none;
    return sim(w1, w2, algo, none);
}

/// Symmetrized measure min(sim(w1, w2), sim(w2, w1)).
///
/// Both directions share the denominator, so this is
/// min(scf(w1, w2), scf(w2, w1)) / (N(N+1)/2). Total: two empty words score 1/1;
/// exactly one empty word scores 0. With the dynamic kernel this performs
/// 2|w1||w2| comparisons.
template <class W1, class W2, ComparisonTally C>
    requires WordPair<W1, W2>
SimilarityScore similarity(const W1& w1, const W2& w2, Algorithm algo, C& counter) {
    const std::size_t longer = std::max(std::ranges::size(w1), std::ranges::size(w2));
    if (longer == 0) return SimilarityScore(1, 1);
    const ScfCount forward = scf(w1, w2, algo, counter);
    const ScfCount backward = scf(w2, w1, algo, counter);
    return SimilarityScore::from_count(std::min(forward, backward), longer);
}

template <class W1, class W2>
    requires WordPair<W1, W2>
SimilarityScore similarity(const W1& w1, const W2& w2, Algorithm algo = Algorithm::dynamic) {
    NullCounter none;
    return similarity(w1, w2, algo, none);
}

}  // namespace ngramsim
