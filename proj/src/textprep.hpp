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

#ifndef SBS_TEXTPREP_HPP_
#define SBS_TEXTPREP_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "stemmer.hpp"

namespace sbs {

/// Settings for the normalization pipeline.
struct PrepConfig {
  Language language = Language::italian;
  Lexicon stopwords;            // matched on surface forms, before stemming
  bool keep_digits = false;     // digits join tokens instead of splitting them
};

/// A document reduced to its ordered stem sequence. `stem_of[k]` is the
/// index in raw_tokens of the token that produced stems[k].
struct ProcessedDocument {
  std::string doc_id;
  std::vector<std::string> raw_tokens;
  std::vector<std::string> stems;
  std::vector<std::size_t> stem_of;
};

// Splits text into lowercase tokens. Tokens are maximal runs of letters
// (plus digits when keep_digits); everything else separates.
std::vector<std::string> tokenize(std::string_view text,
                                  bool keep_digits = false);

// tokenize -> drop stop-words -> stem. Order of surviving tokens is kept.
ProcessedDocument preprocess(const Document& doc, const PrepConfig& config);

}  // namespace sbs

#endif  // SBS_TEXTPREP_HPP_
