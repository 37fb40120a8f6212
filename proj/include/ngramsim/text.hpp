// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ngramsim/errors.hpp"

namespace ngramsim {

template <class T>
concept Symbol = std::equality_comparable<T> && std::copyable<T>;

/// An immutable word: a finite sequence of symbols indexed from 0.
///
/// `slice(a, b)` is the half-open factor w[a..b), `suffix(a)` is w[a..).
/// Both are views into the owning text and must not outlive it.
template <Symbol S>
class BasicText {
  public:
    using symbol_type = S;
    using view_type = std::span<const S>;

    BasicText() = default;
    explicit BasicText(std::vector<S> symbols) : symbols_(std::move(symbols)) {}
    BasicText(std::initializer_list<S> symbols) : symbols_(symbols) {}

    template <std::ranges::input_range R>
        requires std::convertible_to<std::ranges::range_value_t<R>, S>
    static BasicText from_range(const R& range) {
        return BasicText(std::vector<S>(std::ranges::begin(range), std::ranges::end(range)));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    const S& operator[](std::size_t k) const noexcept { return symbols_[k]; }

    const S& at(std::size_t k) const {
        if (k >= symbols_.size()) {
            throw PreconditionViolation("text index " + std::to_string(k) + " out of range for length " +
                                        std::to_string(symbols_.size()));
        }
        return symbols_[k];
    }

    view_type view() const noexcept { return symbols_; }

    view_type slice(std::size_t a, std::size_t b) const {
        if (a > b || b > symbols_.size()) {
            throw PreconditionViolation("slice [" + std::to_string(a) + ", " + std::to_string(b) +
                                        ") out of range for length " + std::to_string(symbols_.size()));
        }
        return view_type(symbols_).subspan(a, b - a);
    }

    view_type suffix(std::size_t a) const { return slice(a, symbols_.size()); }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend bool operator==(const BasicText&, const BasicText&) = default;

  private:
    std::vector<S> symbols_;
};

/// Unicode code points; byte-oriented input maps each byte to the code point of the same value.
using Text = BasicText<char32_t>;

inline Text ascii_text(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    for (unsigned char c : s) out.push_back(c);
    return Text(std::move(out));
}

}  // namespace ngramsim
