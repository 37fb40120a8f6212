// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "ngramsim/complexity.hpp"

namespace ngramsim::report {

// Header: algo,len1,len2,comparisons,predicted,match
void write_csv(std::ostream& os, std::span<const complexity::CountRecord> records);
void write_json(std::ostream& os, std::span<const complexity::CountRecord> records);

// Header: algo,len,wall_time_ns,comparisons
void write_csv(std::ostream& os, std::span<const complexity::ScalingRecord> records);
void write_json(std::ostream& os, std::span<const complexity::ScalingRecord> records);

/// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are wrapped
/// in quotes with embedded quotes doubled.
std::string csv_field(std::string_view field);

}  // namespace ngramsim::report
