// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ngramsim/complexity.hpp"
#include "ngramsim/core.hpp"
#include "ngramsim/utf8.hpp"

namespace ngramsim::cli {

enum class OutputFormat { text, json, csv };

struct CliConfig {
    Algorithm algo = Algorithm::dynamic;
    OutputFormat format = OutputFormat::text;
    SymbolMode symbol_mode = SymbolMode::codepoints;
    bool lowercase = false;
    bool exact = false;
    int precision = 6;
};

/// Environment variable naming the default algorithm; --algo wins over it.
inline constexpr const char* kAlgoEnv = "NGRAMSIM_ALGO";

/// Exit codes: 0 success, 1 operation failure (I/O, encoding, count mismatch),
/// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const complexity::CountingKernels& kernels = complexity::default_kernels());

}  // namespace ngramsim::cli
