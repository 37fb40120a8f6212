// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "ngramsim/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "ngramsim/report.hpp"

namespace ngramsim::corpus {

Dictionary::Dictionary(const std::vector<std::string>& words, const LoadOptions& options) {
    for (const auto& w : words) {
        if (w.empty()) continue;
        add(w, decode(w, options.mode, options.lowercase));
    }
}

void Dictionary::add(std::string raw, Text text) {
    entries_.push_back(Entry{entries_.size(), std::move(text), std::move(raw)});
}

Dictionary load_dictionary(std::istream& in, const LoadOptions& options) {
    Dictionary dict;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Text text = decode(line, options.mode, options.lowercase, line_no);
        dict.add(std::move(line), std::move(text));
    }
    if (in.bad()) throw std::runtime_error("read error after line " + std::to_string(line_no));
    return dict;
}

bool ranks_before(const MatchResult& lhs, const MatchResult& rhs) noexcept {
    if (const auto c = lhs.score <=> rhs.score; c != 0) return c > 0;
    if (const auto c = lhs.raw <=> rhs.raw; c != 0) return c < 0;
    return lhs.entry_id < rhs.entry_id;
}

std::vector<MatchResult> top_k(const Text& query, const Dictionary& dict, std::size_t k, Algorithm algo) {
    if (k == 0) throw std::invalid_argument("top_k requires k >= 1");
    std::vector<MatchResult> results;
    results.reserve(dict.size());
    for (const auto& entry : dict) {
        results.push_back(MatchResult{entry.id, entry.raw, similarity(query, entry.text, algo)});
    }
    const auto keep = static_cast<std::ptrdiff_t>(std::min(k, results.size()));
    std::partial_sort(results.begin(), results.begin() + keep, results.end(), ranks_before);
    results.resize(static_cast<std::size_t>(keep));
    return results;
}

ScoreMatrix similarity_matrix(const Dictionary& dict, Algorithm algo) {
    ScoreMatrix m(dict.size());
    for (std::size_t i = 0; i < dict.size(); ++i) {
        for (std::size_t j = i; j < dict.size(); ++j) {
            m(i, j) = similarity(dict[i].text, dict[j].text, algo);
            m(j, i) = m(i, j);
        }
    }
    return m;
}

void write_matrix_csv(std::ostream& os, const Dictionary& dict, const ScoreMatrix& matrix, const MatrixFormat& format) {
    for (std::size_t j = 0; j < dict.size(); ++j) {
        if (j != 0) os << ',';
        os << report::csv_field(dict[j].raw);
    }
    os << '\n';
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            if (j != 0) os << ',';
            const auto& cell = matrix(i, j);
            os << (format.exact ? cell.to_fraction() : cell.to_decimal(format.precision));
        }
        os << '\n';
    }
}

}  // namespace ngramsim::corpus
