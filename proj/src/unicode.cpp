// Copyright 2026 The sbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unicode.hpp"

namespace sbs::uni {

std::size_t decode(std::string_view s, std::size_t pos, char32_t& out) {
  out = kInvalid;
  if (pos >= s.size()) return 0;
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    out = b0;
    return 1;
  }
  auto cont = [&](std::size_t i) {
    return pos + i < s.size() &&
           (static_cast<unsigned char>(s[pos + i]) & 0xC0) == 0x80;
  };
  auto tail = [&](std::size_t i) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[pos + i]) & 0x3F);
  };
  if ((b0 & 0xE0) == 0xC0) {
    if (!cont(1)) return 0;
    const char32_t cp = ((b0 & 0x1Fu) << 6) | tail(1);
    if (cp < 0x80) return 0;  // overlong
    out = cp;
    return 2;
  }
  if ((b0 & 0xF0) == 0xE0) {
    if (!cont(1) || !cont(2)) return 0;
    const char32_t cp = ((b0 & 0x0Fu) << 12) | (tail(1) << 6) | tail(2);
    if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
    out = cp;
    return 3;
  }
  if ((b0 & 0xF8) == 0xF0) {
    if (!cont(1) || !cont(2) || !cont(3)) return 0;
    const char32_t cp =
        ((b0 & 0x07u) << 18) | (tail(1) << 12) | (tail(2) << 6) | tail(3);
    if (cp < 0x10000 || cp > 0x10FFFF) return 0;
    out = cp;
    return 4;
  }
  return 0;
}

void append_utf8(std::string& out, char32_t cp) {
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

std::optional<std::size_t> find_invalid_utf8(std::string_view s) {
  std::size_t pos = 0;
  char32_t cp;
  while (pos < s.size()) {
    const std::size_t n = decode(s, pos, cp);
    if (n == 0) return pos;
    pos += n;
  }
  return std::nullopt;
}

bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp < 0x80) return false;
  // Latin-1 Supplement letters, excluding multiplication/division signs.
  if (cp >= 0x00C0 && cp <= 0x00FF) return cp != 0x00D7 && cp != 0x00F7;
  // Latin Extended-A and Extended-B.
  if (cp >= 0x0100 && cp <= 0x024F) return true;
  // Greek and Coptic (letters; the block also holds a few symbols we skip).
  if (cp >= 0x0370 && cp <= 0x03FF) {
    return !(cp == 0x0374 || cp == 0x0375 || cp == 0x037E || cp == 0x0384 ||
             cp == 0x0385 || cp == 0x0387);
  }
  // Cyrillic.
  if (cp >= 0x0400 && cp <= 0x04FF) return true;
  return false;
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 Supplement uppercase.
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  // Latin Extended-A: mostly alternating upper/lower pairs.
  if (cp == 0x0178) return 0x00FF;  // Y with diaeresis
  if ((cp >= 0x0100 && cp <= 0x0137) || (cp >= 0x014A && cp <= 0x0177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  // Greek.
  if (cp == 0x0386) return 0x03AC;
  if (cp >= 0x0388 && cp <= 0x038A) return cp + 0x25;
  if (cp == 0x038C) return 0x03CC;
  if (cp == 0x038E || cp == 0x038F) return cp + 0x3F;
  if (cp >= 0x0391 && cp <= 0x03A1) return cp + 0x20;
  if (cp >= 0x03A3 && cp <= 0x03AB) return cp + 0x20;
  // Cyrillic.
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  return cp;
}

std::u32string to_u32(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  char32_t cp;
  while (pos < s.size()) {
    const std::size_t n = decode(s, pos, cp);
    if (n == 0) {
      pos += 1;  // skip the bad byte; validated inputs never reach this
      continue;
    }
    out.push_back(cp);
    pos += n;
  }
  return out;
}

std::string to_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char32_t cp : s) append_utf8(out, cp);
  return out;
}

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  char32_t cp;
  while (pos < s.size()) {
    const std::size_t n = decode(s, pos, cp);
    if (n == 0) {
      out.push_back(s[pos]);
      pos += 1;
      continue;
    }
    append_utf8(out, to_lower(cp));
    pos += n;
  }
  return out;
}

}  // namespace sbs::uni
