// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dictionary lookup on top of the similarity measure: ranked top-k search and
// all-pairs similarity matrices.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ngramsim/core.hpp"
#include "ngramsim/score.hpp"
#include "ngramsim/text.hpp"
#include "ngramsim/utf8.hpp"

namespace ngramsim::corpus {

struct Entry {
    std::size_t id = 0;
    Text text;
    std::string raw;
};

struct LoadOptions {
    SymbolMode mode = SymbolMode::codepoints;
    bool lowercase = false;
};

/// Entries in file order with dense ids 0..n-1.
class Dictionary {
  public:
    Dictionary() = default;
    explicit Dictionary(const std::vector<std::string>& words, const LoadOptions& options = {});

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const Entry& operator[](std::size_t id) const noexcept { return entries_[id]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

  private:
    friend Dictionary load_dictionary(std::istream& in, const LoadOptions& options);

    void add(std::string raw, Text text);

    std::vector<Entry> entries_;
};

/// One entry per nonempty line; a trailing "\n" or "\r\n" is stripped and blank
/// lines are skipped. Throws EncodingError with the 1-based line number on
/// malformed UTF-8 in code point mode.
Dictionary load_dictionary(std::istream& in, const LoadOptions& options = {});

struct MatchResult {
    std::size_t entry_id = 0;
    std::string raw;
    SimilarityScore score;
};

/// Score descending (exact), then raw ascending, then id ascending.
bool ranks_before(const MatchResult& lhs, const MatchResult& rhs) noexcept;

/// The min(k, |dict|) best entries for `query`. Throws std::invalid_argument for k == 0.
std::vector<MatchResult> top_k(const Text& query, const Dictionary& dict, std::size_t k,
                               Algorithm algo = Algorithm::dynamic);

/// Square matrix of scores, row-major.
class ScoreMatrix {
  public:
    explicit ScoreMatrix(std::size_t n) : n_(n), cells_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    const SimilarityScore& operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * n_ + j]; }
    SimilarityScore& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * n_ + j]; }

  private:
    std::size_t n_;
    std::vector<SimilarityScore> cells_;
};

/// M[i][j] = similarity(entry_i, entry_j). The upper triangle is computed and
/// mirrored.
ScoreMatrix similarity_matrix(const Dictionary& dict, Algorithm algo = Algorithm::dynamic);

struct MatrixFormat {
    int precision = 6;
    bool exact = false;  // cells as "numerator/denominator"
};

/// Header row of raw entry strings, then one row of cells per entry.
void write_matrix_csv(std::ostream& os, const Dictionary& dict, const ScoreMatrix& matrix,
                      const MatrixFormat& format = {});

}  // namespace ngramsim::corpus
