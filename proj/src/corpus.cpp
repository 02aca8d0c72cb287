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

#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "error.hpp"
#include "textprep.hpp"
#include "unicode.hpp"
#include "util.hpp"

namespace sbs {

namespace fs = std::filesystem;

namespace {

void check_utf8(const std::string& text, const std::string& where) {
  if (const auto offset = uni::find_invalid_utf8(text)) {
    throw Error(ErrorKind::validation,
                "corpus: invalid UTF-8 at byte offset " +
                    std::to_string(*offset) + " in " + where);
  }
}

std::vector<Document> load_from_directory(const fs::path& dir) {
  std::vector<Document> docs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") {
      continue;
    }
    Document doc;
    doc.id = entry.path().stem().string();
    doc.source_path = entry.path().string();
    doc.text = util::read_file(entry.path());
    check_utf8(doc.text, doc.source_path);
    if (doc.id.empty()) {
      throw Error(ErrorKind::validation,
                  "corpus: empty document id from " + doc.source_path);
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> load_from_jsonl(const fs::path& file) {
  std::vector<Document> docs;
  const std::string data = util::read_file(file);
  std::istringstream lines(data);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::validation,
                  "corpus: " + file.string() + " line " +
                      std::to_string(line_no) + ": " + e.what());
    }
    if (!record.is_object() || !record.contains("id") ||
        !record.contains("text") || !record["id"].is_string() ||
        !record["text"].is_string()) {
      throw Error(ErrorKind::validation,
                  "corpus: " + file.string() + " line " +
                      std::to_string(line_no) +
                      ": expected an object with string fields id and text");
    }
    Document doc;
    doc.id = record["id"].get<std::string>();
    doc.text = record["text"].get<std::string>();
    doc.source_path = file.string() + ":" + std::to_string(line_no);
    if (doc.id.empty()) {
      throw Error(ErrorKind::validation,
                  "corpus: empty document id at " + doc.source_path);
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace

std::vector<Document> load_corpus(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec) || ec) {
    throw Error(ErrorKind::io, "corpus: path does not exist: " + path.string());
  }
  std::vector<Document> docs = fs::is_directory(path)
                                   ? load_from_directory(path)
                                   : load_from_jsonl(path);
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < docs.size(); ++i) {
    if (docs[i].id == docs[i - 1].id) {
      throw Error(ErrorKind::validation,
                  "corpus: duplicate document id '" + docs[i].id + "'");
    }
  }
  return docs;
}

Lexicon load_lexicon(const fs::path& path, std::string name) {
  const std::string data = util::read_file(path);
  check_utf8(data, path.string());
  Lexicon lexicon;
  lexicon.name = std::move(name);
  std::istringstream lines(data);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    std::string word = line.substr(begin, end - begin + 1);
    if (word[0] == '#') continue;
    if (word.find_first_of(" \t") != std::string::npos) {
      throw Error(ErrorKind::validation,
                  "corpus: lexicon entry with internal whitespace at " +
                      path.string() + " line " + std::to_string(line_no));
    }
    lexicon.words.insert(uni::lowercase(word));
  }
  if (lexicon.words.empty()) {
    throw Error(ErrorKind::validation,
                "corpus: lexicon " + path.string() +
                    " is empty after parsing (misconfigured path?)");
  }
  return lexicon;
}

namespace {

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

// Population formula (divide by n, not n-1).
MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd out;
  if (xs.empty()) return out;
  double sum = 0.0;
  for (const double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (const double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.sd = std::sqrt(ss / static_cast<double>(xs.size()));
  return out;
}

std::size_t letter_count(std::string_view token) {
  std::size_t count = 0;
  std::size_t pos = 0;
  char32_t cp;
  while (pos < token.size()) {
    const std::size_t n = uni::decode(token, pos, cp);
    if (n == 0) break;
    if (uni::is_letter(cp)) ++count;
    pos += n;
  }
  return count;
}

}  // namespace

CorpusStats corpus_stats(std::span<const Document> docs,
                         const Lexicon& positive, const Lexicon& negative) {
  if (docs.empty()) {
    throw Error(ErrorKind::validation, "corpus: cannot compute statistics of "
                                       "an empty corpus");
  }
  CorpusStats stats;
  stats.n_docs = docs.size();
  std::vector<double> tokens_per_doc, types_per_doc, ttr_per_doc;
  std::uint64_t total_tokens = 0;
  std::uint64_t six_letter_tokens = 0;
  for (const Document& doc : docs) {
    const std::vector<std::string> tokens = tokenize(doc.text);
    const std::unordered_set<std::string> types(tokens.begin(), tokens.end());
    tokens_per_doc.push_back(static_cast<double>(tokens.size()));
    types_per_doc.push_back(static_cast<double>(types.size()));
    if (!tokens.empty()) {
      ttr_per_doc.push_back(static_cast<double>(types.size()) /
                            static_cast<double>(tokens.size()));
    }
    for (const std::string& token : tokens) {
      ++total_tokens;
      if (letter_count(token) >= 6) ++six_letter_tokens;
      if (positive.contains(token)) ++stats.positive_count;
      if (negative.contains(token)) ++stats.negative_count;
    }
  }
  if (ttr_per_doc.empty()) {
    throw Error(ErrorKind::validation,
                "corpus: all documents are empty, no type/token ratio defined");
  }
  const MeanSd tokens_ms = mean_sd(tokens_per_doc);
  const MeanSd types_ms = mean_sd(types_per_doc);
  const MeanSd ttr_ms = mean_sd(ttr_per_doc);
  stats.tokens_mean = tokens_ms.mean;
  stats.tokens_sd = tokens_ms.sd;
  stats.types_mean = types_ms.mean;
  stats.types_sd = types_ms.sd;
  stats.ttr_mean = ttr_ms.mean;
  stats.ttr_sd = ttr_ms.sd;
  stats.six_letter_ratio =
      total_tokens == 0
          ? 0.0
          : static_cast<double>(six_letter_tokens) /
                static_cast<double>(total_tokens);
  if (stats.negative_count > 0) {
    stats.pos_neg_excess = static_cast<double>(stats.positive_count) /
                               static_cast<double>(stats.negative_count) -
                           1.0;
  }
  return stats;
}

}  // namespace sbs
