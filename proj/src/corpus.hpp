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

#ifndef SBS_CORPUS_HPP_
#define SBS_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbs {

/// One raw text with a stable identifier.
struct Document {
  std::string id;
  std::string text;
  std::string source_path;  // provenance, may be empty
};

/// A named set of lowercase words (stop-words, polarity lists, ...).
struct Lexicon {
  std::string name;
  std::set<std::string> words;

  bool contains(std::string_view word) const {
    return words.find(std::string(word)) != words.end();
  }
};

/// Corpus descriptive statistics over raw tokens (lowercased, punctuation
/// stripped, before stop-word removal and stemming). Means and standard
/// deviations use the population formula; documents without tokens are
/// excluded from the TTR average.
struct CorpusStats {
  std::size_t n_docs = 0;
  double tokens_mean = 0.0;
  double tokens_sd = 0.0;
  double types_mean = 0.0;
  double types_sd = 0.0;
  double ttr_mean = 0.0;
  double ttr_sd = 0.0;
  double six_letter_ratio = 0.0;  // tokens with >= 6 letters / all tokens
  std::uint64_t positive_count = 0;
  std::uint64_t negative_count = 0;
  // positive/negative - 1; empty when negative_count == 0.
  std::optional<double> pos_neg_excess;
};

// Loads a corpus from a directory of *.txt files (id = file stem) or a JSONL
// file ({"id": ..., "text": ...} per line). Documents come back sorted by id.
std::vector<Document> load_corpus(const std::filesystem::path& path);

// One word per line; blank lines and '#' comments ignored; entries are
// lowercased and deduplicated. An empty result is a validation error.
Lexicon load_lexicon(const std::filesystem::path& path, std::string name);

CorpusStats corpus_stats(std::span<const Document> docs,
                         const Lexicon& positive, const Lexicon& negative);

}  // namespace sbs

#endif  // SBS_CORPUS_HPP_
