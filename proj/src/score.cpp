// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "ngramsim/score.hpp"

#include <ostream>
#include <stdexcept>

#include "ngramsim/errors.hpp"

namespace ngramsim {

namespace {

__extension__ typedef unsigned __int128 wide;

std::string to_string(wide v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return out;
}

}  // namespace

SimilarityScore::SimilarityScore(value_type numerator, value_type denominator)
    : numerator_(numerator), denominator_(denominator) {
    if (denominator == 0) {
        throw std::domain_error("similarity score with zero denominator");
    }
    if (numerator > denominator) {
        throw std::domain_error("similarity score numerator " + std::to_string(numerator) +
                                " exceeds denominator " + std::to_string(denominator));
    }
}

SimilarityScore SimilarityScore::from_count(value_type numerator, std::uint64_t longer_length) {
    if (longer_length == 0) {
        throw std::domain_error("similarity of two empty words has no N(N+1)/2 denominator");
    }
    return SimilarityScore(numerator, substring_count(longer_length));
}

std::uint64_t substring_count(std::uint64_t length) {
    wide n = length;
    wide total = n * (n + 1) / 2;
    if (total > static_cast<wide>(UINT64_MAX)) {
        throw CounterOverflow("substring count N(N+1)/2 overflows 64 bits for N = " + std::to_string(length));
    }
    return static_cast<std::uint64_t>(total);
}

bool operator==(const SimilarityScore& lhs, const SimilarityScore& rhs) noexcept {
    return static_cast<wide>(lhs.numerator_) * rhs.denominator_ == static_cast<wide>(rhs.numerator_) * lhs.denominator_;
}

std::weak_ordering operator<=>(const SimilarityScore& lhs, const SimilarityScore& rhs) noexcept {
    wide l = static_cast<wide>(lhs.numerator_) * rhs.denominator_;
    wide r = static_cast<wide>(rhs.numerator_) * lhs.denominator_;
    if (l < r) return std::weak_ordering::less;
    if (l > r) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

std::string SimilarityScore::to_decimal(int precision) const {
    if (precision < 0 || precision > 18) {
        throw std::invalid_argument("precision must be in [0, 18], got " + std::to_string(precision));
    }
    wide scale = 1;
    for (int k = 0; k < precision; ++k) scale *= 10;

    // numerator <= denominator < 2^64 and scale <= 10^18, so the product fits 128 bits.
    wide scaled = static_cast<wide>(numerator_) * scale;
    wide quotient = scaled / denominator_;
    wide twice_rem = (scaled % denominator_) * 2;
    if (twice_rem > denominator_ || (twice_rem == denominator_ && quotient % 2 == 1)) {
        ++quotient;
    }

    std::string digits = to_string(quotient);
    if (precision == 0) return digits;
    if (digits.size() <= static_cast<std::size_t>(precision)) {
        digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(precision), 1, '.');
    return digits;
}

std::string SimilarityScore::to_fraction() const {
    return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

std::ostream& operator<<(std::ostream& os, const SimilarityScore& score) {
    return os << score.to_fraction();
}

}  // namespace ngramsim
