// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "ngramsim/report.hpp"

#include <ostream>

#include <json.hpp>

namespace ngramsim::report {

void write_csv(std::ostream& os, std::span<const complexity::CountRecord> records) {
    os << "algo,len1,len2,comparisons,predicted,match\n";
    for (const auto& r : records) {
        os << csv_field(r.algo) << ',' << r.len1 << ',' << r.len2 << ',' << r.comparisons << ',' << r.predicted << ','
           << (r.match ? "true" : "false") << '\n';
    }
}

void write_json(std::ostream& os, std::span<const complexity::CountRecord> records) {
    auto array = nlohmann::json::array();
    for (const auto& r : records) {
        array.push_back({{"algo", r.algo},
                         {"len1", r.len1},
                         {"len2", r.len2},
                         {"comparisons", r.comparisons},
                         {"predicted", r.predicted},
                         {"match", r.match}});
    }
    os << array.dump(2) << '\n';
}

void write_csv(std::ostream& os, std::span<const complexity::ScalingRecord> records) {
    os << "algo,len,wall_time_ns,comparisons\n";
    for (const auto& r : records) {
        os << csv_field(r.algo) << ',' << r.len << ',' << r.wall_time.count() << ',' << r.comparisons << '\n';
    }
}

void write_json(std::ostream& os, std::span<const complexity::ScalingRecord> records) {
    auto array = nlohmann::json::array();
    for (const auto& r : records) {
        array.push_back({{"algo", r.algo},
                         {"len", r.len},
                         {"wall_time_ns", r.wall_time.count()},
                         {"comparisons", r.comparisons}});
    }
    os << array.dump(2) << '\n';
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace ngramsim::report
