// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Instrumented experiments checking the exact symbol-comparison counts of the
// scf kernels against their closed-form predictions.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ngramsim/core.hpp"
#include "ngramsim/counter.hpp"
#include "ngramsim/score.hpp"
#include "ngramsim/text.hpp"

namespace ngramsim::complexity {

struct CountRecord {
    std::string algo;
    std::uint64_t len1 = 0;
    std::uint64_t len2 = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t predicted = 0;
    bool match = false;

    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct ScalingRecord {
    std::string algo;
    std::uint64_t len = 0;
    std::chrono::nanoseconds wall_time{0};
    std::uint64_t comparisons = 0;
};

struct TextPair {
    Text first;
    Text second;
};

/// Worst-case comparison count of the exhaustive naive kernel,
/// sum_{i=1}^{min(a,b)} (a-i+1)(b-i+1)i, by direct summation.
/// Throws CounterOverflow when the total does not fit 64 bits.
std::uint64_t naive_worst_case_comparisons(std::uint64_t a, std::uint64_t b);

/// The kernels under verification. Replaceable so a deliberately faulty kernel
/// can serve as a negative control.
struct CountingKernels {
    std::function<ScfCount(const Text&, const Text&, ComparisonCounter&)> dynamic;
    std::function<SimilarityScore(const Text&, const Text&, ComparisonCounter&)> similarity;
    std::function<ScfCount(const Text&, const Text&, bool exhaustive, ComparisonCounter&)> naive;
};

const CountingKernels& default_kernels();

/// Two records per pair: "dynamic" (predicted |w1||w2|) and "similarity"
/// (predicted 2|w1||w2|). Mismatches are reported, never thrown.
std::vector<CountRecord> verify_dynamic_count(std::span<const TextPair> pairs,
                                              const CountingKernels& kernels = default_kernels());

/// One "naive-exhaustive" record per (a, b) in [1, max_a] x [1, max_b], run on
/// a-fold vs b-fold repetitions of a single symbol.
std::vector<CountRecord> verify_naive_count(std::uint64_t max_a, std::uint64_t max_b,
                                            const CountingKernels& kernels = default_kernels());

bool all_match(std::span<const CountRecord> records) noexcept;

/// A word of `length` copies of the same symbol.
Text uniform_text(std::size_t length, char32_t symbol = U'a');

/// `count` random pairs, each with lengths uniform in [0, max_length] and symbols
/// drawn from the first k lowercase letters, k uniform in [1, 26] per pair.
std::vector<TextPair> random_pairs(std::size_t count, std::size_t max_length, std::mt19937_64& rng);

/// Median wall time over `trials` runs and the exact comparison count of `algo`
/// on uniform (worst-case) n x n inputs for each n in `sizes`. The naive kernel
/// runs in exhaustive mode. Throws std::invalid_argument if sizes are not
/// ascending or trials == 0.
std::vector<ScalingRecord> scaling_experiment(Algorithm algo, std::span<const std::size_t> sizes, std::size_t trials);

/// Label used in records for `algo` as run by scaling_experiment.
std::string scaling_label(Algorithm algo);

}  // namespace ngramsim::complexity
