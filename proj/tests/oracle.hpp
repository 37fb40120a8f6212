// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference computations used only by the tests. Nothing here calls
// into the library kernels.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ngramsim::oracle {

/// scf by enumerating every window of w1 and searching it with std::u32string::find.
inline std::uint64_t scf(std::u32string_view w1, std::u32string_view w2) {
    std::uint64_t total = 0;
    const std::size_t shorter = std::min(w1.size(), w2.size());
    for (std::size_t i = 1; i <= shorter; ++i) {
        for (std::size_t j = 0; j + i <= w1.size(); ++j) {
            if (w2.find(w1.substr(j, i)) != std::u32string_view::npos) ++total;
        }
    }
    return total;
}

/// Longest prefix of w1[j..) found in w2, by trying every length.
inline std::size_t maxlen(std::u32string_view w1, std::u32string_view w2, std::size_t j) {
    std::size_t best = 0;
    for (std::size_t i = 1; j + i <= w1.size(); ++i) {
        if (w2.find(w1.substr(j, i)) != std::u32string_view::npos) best = i;
    }
    return best;
}

inline std::size_t lcp(std::u32string_view x, std::u32string_view y) {
    return static_cast<std::size_t>(std::ranges::mismatch(x, y).in1 - x.begin());
}

/// Corrected closed form of sum_{i=1}^{min(a,b)} (a-i+1)(b-i+1)i:
/// with m = min(a, b), M = max(a, b) it equals m(m+1)(m+2)(2M-m+1)/12.
inline std::uint64_t naive_count_closed_form(std::uint64_t a, std::uint64_t b) {
    const auto m = static_cast<unsigned __int128>(std::min(a, b));
    const auto big = static_cast<unsigned __int128>(std::max(a, b));
    return static_cast<std::uint64_t>(m * (m + 1) * (m + 2) * (2 * big - m + 1) / 12);
}

/// The expansion (2a^3b + 6a^2b - a^4 - 10a^3 - 11a^2 - 8ab - 2a)/12 as printed in
/// the original derivation, returned as 12x to stay integral.
inline std::int64_t printed_expansion_times_12(std::int64_t a, std::int64_t b) {
    return 2 * a * a * a * b + 6 * a * a * b - a * a * a * a - 10 * a * a * a - 11 * a * a - 8 * a * b - 2 * a;
}

/// All strings over `alphabet` with length in [0, max_len], shortest first.
inline std::vector<std::u32string> all_strings(std::u32string_view alphabet, std::size_t max_len) {
    std::vector<std::u32string> out{U""};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t k = level_begin; k < level_end; ++k) {
            for (char32_t c : alphabet) out.push_back(out[k] + c);
        }
        level_begin = level_end;
    }
    return out;
}

}  // namespace ngramsim::oracle
