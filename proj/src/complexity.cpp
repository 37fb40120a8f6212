// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "ngramsim/complexity.hpp"

#include <algorithm>
#include <stdexcept>

#include "ngramsim/errors.hpp"

namespace ngramsim::complexity {

namespace {

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(x, y, &out)) {
        throw CounterOverflow("naive worst-case count overflows 64 bits");
    }
    return out;
}

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(x, y, &out)) {
        throw CounterOverflow("naive worst-case count overflows 64 bits");
    }
    return out;
}

CountRecord make_record(std::string algo, std::uint64_t len1, std::uint64_t len2, std::uint64_t comparisons,
                        std::uint64_t predicted) {
    return CountRecord{std::move(algo), len1, len2, comparisons, predicted, comparisons == predicted};
}

}  // namespace

std::uint64_t naive_worst_case_comparisons(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t shorter = std::min(a, b);
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; i <= shorter; ++i) {
        total = checked_add(total, checked_mul(checked_mul(a - i + 1, b - i + 1), i));
    }
    return total;
}

const CountingKernels& default_kernels() {
    static const CountingKernels kernels{
        [](const Text& w1, const Text& w2, ComparisonCounter& c) { return scf_dynamic(w1, w2, c); },
        [](const Text& w1, const Text& w2, ComparisonCounter& c) {
            return similarity(w1, w2, Algorithm::dynamic, c);
        },
        [](const Text& w1, const Text& w2, bool exhaustive, ComparisonCounter& c) {
            return scf_naive(w1, w2, exhaustive, c);
        },
    };
    return kernels;
}

std::vector<CountRecord> verify_dynamic_count(std::span<const TextPair> pairs, const CountingKernels& kernels) {
    std::vector<CountRecord> records;
    records.reserve(pairs.size() * 2);
    for (const auto& [w1, w2] : pairs) {
        const std::uint64_t product = checked_mul(w1.size(), w2.size());

        ComparisonCounter scf_counter;
        kernels.dynamic(w1, w2, scf_counter);
        records.push_back(make_record("dynamic", w1.size(), w2.size(), scf_counter.count(), product));

        ComparisonCounter sim_counter;
        kernels.similarity(w1, w2, sim_counter);
        records.push_back(make_record("similarity", w1.size(), w2.size(), sim_counter.count(), checked_mul(2, product)));
    }
    return records;
}

std::vector<CountRecord> verify_naive_count(std::uint64_t max_a, std::uint64_t max_b, const CountingKernels& kernels) {
    std::vector<CountRecord> records;
    for (std::uint64_t a = 1; a <= max_a; ++a) {
        const Text w1 = uniform_text(a);
        for (std::uint64_t b = 1; b <= max_b; ++b) {
            const Text w2 = uniform_text(b);
            ComparisonCounter counter;
            kernels.naive(w1, w2, true, counter);
            records.push_back(make_record("naive-exhaustive", a, b, counter.count(), naive_worst_case_comparisons(a, b)));
        }
    }
    return records;
}

bool all_match(std::span<const CountRecord> records) noexcept {
    return std::ranges::all_of(records, &CountRecord::match);
}

Text uniform_text(std::size_t length, char32_t symbol) { return Text(std::vector<char32_t>(length, symbol)); }

std::vector<TextPair> random_pairs(std::size_t count, std::size_t max_length, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> length(0, max_length);
    std::uniform_int_distribution<int> alphabet(1, 26);
    auto draw = [&](std::size_t n, int k) {
        std::uniform_int_distribution<int> letter(0, k - 1);
        std::vector<char32_t> symbols(n);
        for (auto& s : symbols) s = U'a' + static_cast<char32_t>(letter(rng));
        return Text(std::move(symbols));
    };
    std::vector<TextPair> pairs;
    pairs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const int sigma = alphabet(rng);
        const std::size_t n1 = length(rng);
        const std::size_t n2 = length(rng);
        Text first = draw(n1, sigma);
        Text second = draw(n2, sigma);
        pairs.push_back({std::move(first), std::move(second)});
    }
    return pairs;
}

std::string scaling_label(Algorithm algo) {
    return algo == Algorithm::naive ? "naive-exhaustive" : std::string(to_string(algo));
}

std::vector<ScalingRecord> scaling_experiment(Algorithm algo, std::span<const std::size_t> sizes, std::size_t trials) {
    if (trials == 0) throw std::invalid_argument("scaling experiment needs at least one trial");
    if (!std::ranges::is_sorted(sizes)) throw std::invalid_argument("scaling experiment sizes must be ascending");

    using clock = std::chrono::steady_clock;
    std::vector<ScalingRecord> records;
    for (std::size_t n : sizes) {
        const Text w1 = uniform_text(n);
        const Text w2 = uniform_text(n);

        ComparisonCounter counter;
        scf(w1, w2, algo, counter, true);

        std::vector<clock::duration> times;
        times.reserve(trials);
        volatile ScfCount sink = 0;
        NullCounter uncounted;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto start = clock::now();
            sink = sink + scf(w1, w2, algo, uncounted, true);
            times.push_back(clock::now() - start);
        }
        std::ranges::nth_element(times, times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2));
        const auto median = times[times.size() / 2];

        records.push_back(ScalingRecord{scaling_label(algo), n,
                                        std::chrono::duration_cast<std::chrono::nanoseconds>(median), counter.count()});
    }
    return records;
}

}  // namespace ngramsim::complexity
