// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "ngramsim/utf8.hpp"

#include <cstdint>
#include <vector>

#include "ngramsim/errors.hpp"

namespace ngramsim {

Text decode_utf8(std::string_view bytes, std::size_t line) {
    std::vector<char32_t> out;
    out.reserve(bytes.size());
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const auto lead = static_cast<unsigned char>(bytes[pos]);
        std::size_t extra = 0;
        char32_t cp = 0;
        char32_t min = 0;
        if (lead < 0x80) {
            out.push_back(lead);
            ++pos;
            continue;
        } else if ((lead & 0xE0) == 0xC0) {
            extra = 1;
            cp = lead & 0x1F;
            min = 0x80;
        } else if ((lead & 0xF0) == 0xE0) {
            extra = 2;
            cp = lead & 0x0F;
            min = 0x800;
        } else if ((lead & 0xF8) == 0xF0) {
            extra = 3;
            cp = lead & 0x07;
            min = 0x10000;
        } else {
            throw EncodingError("invalid UTF-8 lead byte at offset " + std::to_string(pos), line);
        }
        if (pos + extra >= bytes.size()) {
            throw EncodingError("truncated UTF-8 sequence at offset " + std::to_string(pos), line);
        }
        for (std::size_t k = 1; k <= extra; ++k) {
            const auto cont = static_cast<unsigned char>(bytes[pos + k]);
            if ((cont & 0xC0) != 0x80) {
                throw EncodingError("invalid UTF-8 continuation byte at offset " + std::to_string(pos + k), line);
            }
            cp = (cp << 6) | (cont & 0x3F);
        }
        if (cp < min) {
            throw EncodingError("overlong UTF-8 sequence at offset " + std::to_string(pos), line);
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw EncodingError("UTF-8 sequence encodes an invalid code point at offset " + std::to_string(pos), line);
        }
        out.push_back(cp);
        pos += extra + 1;
    }
    return Text(std::move(out));
}

Text decode_bytes(std::string_view bytes) {
    std::vector<char32_t> out;
    out.reserve(bytes.size());
    for (unsigned char c : bytes) out.push_back(c);
    return Text(std::move(out));
}

std::string encode_utf8(const Text& text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

char32_t to_lower(char32_t c) noexcept {
    if (c >= U'A' && c <= U'Z') return c + 0x20;
    if (c < 0x80) return c;
    // Latin-1: À..Þ except ×
    if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
    // Latin Extended-A: mostly even upper / odd lower, with two odd-upper runs
    // and the lone Ÿ living in Latin-1's lowercase slot.
    if (c >= 0x100 && c <= 0x137) return c | 1;
    if (c >= 0x139 && c <= 0x148) return (c % 2 == 1) ? c + 1 : c;
    if (c >= 0x14A && c <= 0x177) return c | 1;
    if (c == 0x178) return 0xFF;
    if (c >= 0x179 && c <= 0x17E) return (c % 2 == 1) ? c + 1 : c;
    // Greek: Α..Ρ, Σ..Ϋ (U+03A2 is unassigned)
    if (c >= 0x391 && c <= 0x3AB && c != 0x3A2) return c + 0x20;
    // Cyrillic: Ѐ..Џ, А..Я
    if (c >= 0x400 && c <= 0x40F) return c + 0x50;
    if (c >= 0x410 && c <= 0x42F) return c + 0x20;
    return c;
}

Text to_lower(const Text& text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    for (char32_t c : text) out.push_back(to_lower(c));
    return Text(std::move(out));
}

Text decode(std::string_view bytes, SymbolMode mode, bool lowercase, std::size_t line) {
    if (mode == SymbolMode::bytes) {
        std::vector<char32_t> out;
        out.reserve(bytes.size());
        for (unsigned char c : bytes) {
            char32_t cp = c;
            if (lowercase && cp >= U'A' && cp <= U'Z') cp += 0x20;
            out.push_back(cp);
        }
        return Text(std::move(out));
    }
    Text text = decode_utf8(bytes, line);
    return lowercase ? to_lower(text) : text;
}

}  // namespace ngramsim
