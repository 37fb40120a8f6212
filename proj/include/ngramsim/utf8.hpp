// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "ngramsim/text.hpp"

namespace ngramsim {

enum class SymbolMode { codepoints, bytes };

/// Strict UTF-8 decoding: rejects overlong forms, surrogates, values above
/// U+10FFFF and truncated sequences. Throws EncodingError carrying `line`.
Text decode_utf8(std::string_view bytes, std::size_t line = 0);

/// One symbol per byte.
Text decode_bytes(std::string_view bytes);

std::string encode_utf8(const Text& text);

/// Simple one-to-one lowercase mapping for ASCII, Latin-1, Latin Extended-A,
/// basic Greek and basic Cyrillic. Other code points are returned unchanged.
char32_t to_lower(char32_t c) noexcept;

Text to_lower(const Text& text);

/// Decode per `mode`, then optionally lowercase. In byte mode only ASCII letters are
/// folded.
Text decode(std::string_view bytes, SymbolMode mode, bool lowercase = false, std::size_t line = 0);

}  // namespace ngramsim
