// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ngramsim {

/// Exact similarity score numerator / denominator.
///
/// The denominator is N(N+1)/2 with N the longer input length, i.e. the number of
/// (not necessarily distinct) substrings of the longer word. Comparison is by
/// cross-multiplication, so 3/6 == 1/2 and no floating point ever decides an
/// ordering. The only score with a denominator that is not of that form is the
/// empty-vs-empty similarity, stored as 1/1.
class SimilarityScore {
  public:
    using value_type = std::uint64_t;

    constexpr SimilarityScore() = default;

    /// Throws std::domain_error when denominator == 0 or numerator > denominator.
    SimilarityScore(value_type numerator, value_type denominator);

    /// numerator / (N(N+1)/2). Requires N > 0 and numerator <= N(N+1)/2.
    static SimilarityScore from_count(value_type numerator, std::uint64_t longer_length);

    constexpr value_type numerator() const noexcept { return numerator_; }
    constexpr value_type denominator() const noexcept { return denominator_; }

    double as_float() const noexcept {
        return static_cast<double>(numerator_) / static_cast<double>(denominator_);
    }

    /// Fixed-point decimal rendering, rounded half-to-even from the exact
    /// rational. precision must be in [0, 18].
    std::string to_decimal(int precision = 6) const;

    /// "numerator/denominator"
    std::string to_fraction() const;

    friend bool operator==(const SimilarityScore& lhs, const SimilarityScore& rhs) noexcept;
    friend std::weak_ordering operator<=>(const SimilarityScore& lhs, const SimilarityScore& rhs) noexcept;

    /// Same numerator and denominator, not just the same value.
    bool identical(const SimilarityScore& other) const noexcept {
        return numerator_ == other.numerator_ && denominator_ == other.denominator_;
    }

  private:
    value_type numerator_ = 0;
    value_type denominator_ = 1;
};

std::ostream& operator<<(std::ostream& os, const SimilarityScore& score);

/// N(N+1)/2, throwing CounterOverflow when it does not fit 64 bits.
std::uint64_t substring_count(std::uint64_t length);

}  // namespace ngramsim
