// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>

#include "ngramsim/errors.hpp"

namespace ngramsim {

/// Tally of symbol-equality tests performed by an instrumented kernel.
///
/// Kernels call `tick()` exactly once per symbol comparison; index arithmetic and
/// length checks are never counted. Incrementing past the 64-bit range throws
/// CounterOverflow.
class ComparisonCounter {
  public:
    using value_type = std::uint64_t;

    ComparisonCounter() = default;
    explicit ComparisonCounter(value_type start) : count_(start) {}

    void tick() {
        if (count_ == std::numeric_limits<value_type>::max()) {
            throw CounterOverflow("comparison counter overflow");
        }
        ++count_;
    }

    value_type count() const noexcept { return count_; }

  private:
    value_type count_ = 0;
};

/// Stand-in for uninstrumented calls; compiles away.
struct NullCounter {
    constexpr void tick() const noexcept {}
};

template <class C>
concept ComparisonTally = requires(C& c) { c.tick(); };

}  // namespace ngramsim
