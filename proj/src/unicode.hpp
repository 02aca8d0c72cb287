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

#ifndef SBS_UNICODE_HPP_
#define SBS_UNICODE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

// Minimal UTF-8 and letter-classification helpers. Letter coverage is the
// Latin blocks (Basic, Latin-1 Supplement, Extended-A/B) plus Greek and
// Cyrillic; other scripts are treated as separators by the tokenizer.
namespace sbs::uni {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes the codepoint starting at `pos`. Returns the number of bytes
// consumed, or 0 if the sequence is invalid (out is set to kInvalid).
std::size_t decode(std::string_view s, std::size_t pos, char32_t& out);

void append_utf8(std::string& out, char32_t cp);

// Byte offset of the first invalid UTF-8 sequence, or nullopt if valid.
std::optional<std::size_t> find_invalid_utf8(std::string_view s);

bool is_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);
char32_t to_lower(char32_t cp);

// Requires valid UTF-8 (callers validate at the I/O boundary).
std::u32string to_u32(std::string_view s);
std::string to_utf8(std::u32string_view s);

std::string lowercase(std::string_view s);

}  // namespace sbs::uni

#endif  // SBS_UNICODE_HPP_
