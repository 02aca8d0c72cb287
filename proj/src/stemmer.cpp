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

#include "stemmer.hpp"

#include <algorithm>

#include "error.hpp"
#include "unicode.hpp"

namespace sbs {

Language language_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
  });
  if (lower == "english") return Language::english;
  if (lower == "italian") return Language::italian;
  throw Error(ErrorKind::config,
              "textprep: unsupported language '" + std::string(name) +
                  "' (supported: english, italian)");
}

std::string_view language_name(Language language) {
  switch (language) {
    case Language::english: return "english";
    case Language::italian: return "italian";
  }
  return "unknown";
}

std::string stem_word(std::string_view word, Language language) {
  if (word.empty()) {
    throw Error(ErrorKind::validation, "textprep: cannot stem an empty word");
  }
  std::u32string w = uni::to_u32(word);
  for (char32_t& c : w) c = uni::to_lower(c);
  switch (language) {
    case Language::english: w = detail::stem_english(std::move(w)); break;
    case Language::italian: w = detail::stem_italian(std::move(w)); break;
  }
  return uni::to_utf8(w);
}

}  // namespace sbs
