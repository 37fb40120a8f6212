// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ngramsim {

// Thrown when an operation is called with arguments outside its documented domain
// (index out of range, window past the end of a word, ...).
class PreconditionViolation : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// Thrown instead of letting a comparison tally or a count formula wrap around.
class CounterOverflow : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

// Malformed input in the configured encoding. `line()` is 1-based, 0 when the
// input is not line-oriented (e.g. a single command argument).
class EncodingError : public std::runtime_error {
  public:
    EncodingError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace ngramsim
