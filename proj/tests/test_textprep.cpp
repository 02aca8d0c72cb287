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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "error.hpp"
#include "textprep.hpp"
#include "unicode.hpp"

using namespace sbs;

namespace {

Lexicon make_lexicon(std::initializer_list<const char*> words) {
  Lexicon lex;
  lex.name = "test";
  for (const char* w : words) lex.words.insert(w);
  return lex;
}

}  // namespace

TEST_CASE("tokenize lowercases and splits on punctuation") {
  CHECK(tokenize("Mi piace, davvero!") ==
        std::vector<std::string>{"mi", "piace", "davvero"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t\n ").empty());
  CHECK(tokenize("SHOUTING Words") ==
        std::vector<std::string>{"shouting", "words"});
}

TEST_CASE("tokenize treats digits as separators unless kept") {
  CHECK(tokenize("e-mail 2021") == std::vector<std::string>{"e", "mail"});
  CHECK(tokenize("e-mail 2021", true) ==
        std::vector<std::string>{"e", "mail", "2021"});
  CHECK(tokenize("abc123def") == std::vector<std::string>{"abc", "def"});
  CHECK(tokenize("abc123def", true) == std::vector<std::string>{"abc123def"});
}

TEST_CASE("tokenize is unicode aware") {
  CHECK(tokenize("Perché c'è?") ==
        std::vector<std::string>{"perché", "c", "è"});
  CHECK(tokenize("Città DELLE luci") ==
        std::vector<std::string>{"città", "delle", "luci"});
  CHECK(tokenize("PERCHÉ") == std::vector<std::string>{"perché"});
}

TEST_CASE("stem_word matches pinned reference values") {
  CHECK(stem_word("abbandonata", Language::italian) == "abbandon");
  CHECK(stem_word("gatto", Language::italian) == "gatt");
  CHECK(stem_word("corre", Language::italian) == "corr");
  CHECK(stem_word("a", Language::english) == "a");
  CHECK(stem_word("cats", Language::english) == "cat");
  CHECK(stem_word("running", Language::english) == "run");
  CHECK(stem_word("runner", Language::english) == "runner");
  CHECK(stem_word("Cats", Language::english) == "cat");
}

TEST_CASE("stem_word rejects empty input") {
  CHECK_THROWS_AS(stem_word("", Language::english), Error);
}

TEST_CASE("language registry") {
  CHECK(language_from_name("italian") == Language::italian);
  CHECK(language_from_name("ENGLISH") == Language::english);
  CHECK(language_name(Language::italian) == "italian");
  CHECK_THROWS_WITH_AS(language_from_name("german"),
                       doctest::Contains("unsupported language"), Error);
}

TEST_CASE("preprocess removes stop-words before stemming") {
  Document doc{"d1", "il gatto corre", ""};
  PrepConfig cfg{Language::italian, make_lexicon({"il"}), false};
  const ProcessedDocument out = preprocess(doc, cfg);
  CHECK(out.raw_tokens == std::vector<std::string>{"il", "gatto", "corre"});
  CHECK(out.stems == std::vector<std::string>{"gatt", "corr"});
  CHECK(out.stem_of == std::vector<std::size_t>{1, 2});
}

TEST_CASE("preprocess can drop everything") {
  Document doc{"d1", "and and and", ""};
  PrepConfig cfg{Language::english, make_lexicon({"and"}), false};
  const ProcessedDocument out = preprocess(doc, cfg);
  CHECK(out.raw_tokens.size() == 3);
  CHECK(out.stems.empty());
  CHECK(out.stem_of.empty());
}

TEST_CASE("preprocess stems english") {
  Document doc{"d1", "running runner", ""};
  PrepConfig cfg{Language::english, {}, false};
  CHECK(preprocess(doc, cfg).stems ==
        std::vector<std::string>{"run", "runner"});
}

TEST_CASE("stem alignment maps every stem to its raw token") {
  Document doc{"d1",
               "Quando entro nel negozio sento subito una sensazione di "
               "piacere e di libertà, guardando le vetrine illuminate.",
               ""};
  PrepConfig cfg{Language::italian, make_lexicon({"di", "e", "le", "una"}),
                 false};
  const ProcessedDocument out = preprocess(doc, cfg);
  REQUIRE(out.stems.size() == out.stem_of.size());
  CHECK(out.stems.size() < out.raw_tokens.size());
  for (std::size_t k = 0; k < out.stems.size(); ++k) {
    REQUIRE(out.stem_of[k] < out.raw_tokens.size());
    CHECK(out.stems[k] ==
          stem_word(out.raw_tokens[out.stem_of[k]], cfg.language));
    if (k > 0) CHECK(out.stem_of[k - 1] < out.stem_of[k]);
  }
}

TEST_CASE("stems contain no separators and are never empty") {
  Document doc{"d1", "perché città qualità sceglierò dell'acqua", ""};
  PrepConfig cfg{Language::italian, {}, false};
  for (const std::string& stem : preprocess(doc, cfg).stems) {
    CHECK(!stem.empty());
    for (const char c : stem) {
      CHECK(c != ' ');
      CHECK(c != '\t');
    }
  }
}

TEST_CASE("removing a stop-word never shrinks the stem sequence") {
  std::mt19937 rng(7);
  const std::vector<std::string> vocab = {"casa", "negozio", "piacere", "il",
                                          "la",   "scelta",  "stile",   "di"};
  for (int round = 0; round < 30; ++round) {
    std::string text;
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    std::uniform_int_distribution<int> len(0, 40);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) text += vocab[pick(rng)] + " ";
    Document doc{"d", text, ""};
    PrepConfig full{Language::italian, make_lexicon({"il", "la", "di"}),
                    false};
    PrepConfig reduced{Language::italian, make_lexicon({"il", "la"}), false};
    CHECK(preprocess(doc, full).stems.size() <=
          preprocess(doc, reduced).stems.size());
  }
}

TEST_CASE("preprocess is deterministic") {
  Document doc{"d1", "Una sensazione di piacere nel negozio.", ""};
  PrepConfig cfg{Language::italian, make_lexicon({"di"}), false};
  const ProcessedDocument a = preprocess(doc, cfg);
  const ProcessedDocument b = preprocess(doc, cfg);
  CHECK(a.raw_tokens == b.raw_tokens);
  CHECK(a.stems == b.stems);
  CHECK(a.stem_of == b.stem_of);
}
