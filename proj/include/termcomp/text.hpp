#pragma once

// UTF-8 handling, token normalization and the built-in tokenizers.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "termcomp/error.hpp"

namespace termcomp {

namespace utf8 {

/// Decodes one code point starting at `pos` and advances `pos`.
/// Returns false on an invalid or truncated sequence (overlongs and
/// surrogates included).
inline bool next(std::string_view s, std::size_t& pos, char32_t& cp) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const unsigned char b0 = byte(pos);
  std::size_t len;
  char32_t min;
  if (b0 < 0x80) {
    cp = b0;
    ++pos;
    return true;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return false;
  }
  if (pos + len > s.size()) return false;
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80) return false;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
  pos += len;
  return true;
}

inline void append(std::string& out, char32_t cp) {
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

inline std::vector<char32_t> decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t pos = 0;
  char32_t cp = 0;
  while (pos < s.size()) {
    if (!next(s, pos, cp)) {
      throw Error(ErrorKind::decode,
                  "invalid UTF-8 sequence at byte offset " + std::to_string(pos));
    }
    out.push_back(cp);
  }
  return out;
}

inline bool valid(std::string_view s) {
  std::size_t pos = 0;
  char32_t cp = 0;
  while (pos < s.size()) {
    if (!next(s, pos, cp)) return false;
  }
  return true;
}

}  // namespace utf8

/// Full-width to half-width fold followed by a lowercase fold.
/// Lowercasing covers ASCII, Latin-1, Greek and basic Cyrillic capitals.
inline char32_t fold_code_point(char32_t cp) {
  if (cp >= 0xFF01 && cp <= 0xFF5E) cp -= 0xFEE0;  // full-width ASCII block
  else if (cp == 0x3000) cp = 0x20;                // ideographic space

  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

inline bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

/// Applies the case/width fold to a whole string.
inline std::string normalize(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : utf8::decode(s)) utf8::append(out, fold_code_point(cp));
  return out;
}

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

enum class TokenizerId {
  whitespace,         // normalize, split on Unicode whitespace
  character_unigram,  // normalize, one token per non-space code point
  passthrough,        // pre-segmented: split on whitespace, tokens kept verbatim
};

inline TokenizerId parse_tokenizer(std::string_view name) {
  if (name == "whitespace") return TokenizerId::whitespace;
  if (name == "character-unigram" || name == "char") return TokenizerId::character_unigram;
  if (name == "passthrough") return TokenizerId::passthrough;
  throw Error(ErrorKind::config, "unknown tokenizer '" + std::string(name) + "'");
}

inline std::string_view to_string(TokenizerId id) {
  switch (id) {
    case TokenizerId::whitespace: return "whitespace";
    case TokenizerId::character_unigram: return "character-unigram";
    case TokenizerId::passthrough: return "passthrough";
  }
  return "?";
}

/// Normalizes a single token the way `tokenize` would under `id`.
inline std::string normalize_token(std::string_view token, TokenizerId id) {
  if (id == TokenizerId::passthrough) {
    if (!utf8::valid(token)) throw Error(ErrorKind::decode, "invalid UTF-8 in token");
    return std::string(token);
  }
  return normalize(token);
}

inline std::vector<std::string> tokenize(std::string_view text, TokenizerId id) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : utf8::decode(text)) {
    if (id != TokenizerId::passthrough) cp = fold_code_point(cp);
    if (is_space(cp)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (id == TokenizerId::character_unigram) {
      std::string one;
      utf8::append(one, cp);
      tokens.push_back(std::move(one));
    } else {
      utf8::append(current, cp);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace termcomp
