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

#include "textprep.hpp"

#include <unordered_map>

#include "error.hpp"
#include "unicode.hpp"

namespace sbs {

std::vector<std::string> tokenize(std::string_view text, bool keep_digits) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = uni::decode(text, pos, cp);
    if (n == 0) {
      // Invalid bytes act as separators; corpus loading validates earlier.
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      pos += 1;
      continue;
    }
    if (uni::is_letter(cp) || (keep_digits && uni::is_ascii_digit(cp))) {
      uni::append_utf8(current, uni::to_lower(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
    pos += n;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

ProcessedDocument preprocess(const Document& doc, const PrepConfig& config) {
  ProcessedDocument out;
  out.doc_id = doc.id;
  out.raw_tokens = tokenize(doc.text, config.keep_digits);
  out.stems.reserve(out.raw_tokens.size());
  out.stem_of.reserve(out.raw_tokens.size());
  // Tokens repeat heavily; memoize stems per document.
  std::unordered_map<std::string, std::string> memo;
  for (std::size_t i = 0; i < out.raw_tokens.size(); ++i) {
    const std::string& token = out.raw_tokens[i];
    if (config.stopwords.contains(token)) continue;
    auto it = memo.find(token);
    if (it == memo.end()) {
      it = memo.emplace(token, stem_word(token, config.language)).first;
    }
    out.stems.push_back(it->second);
    out.stem_of.push_back(i);
  }
  return out;
}

}  // namespace sbs
