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

// Snowball English stemmer (Porter2),
// https://snowballstem.org/algorithms/english/stemmer.html

#include <array>
#include <string>
#include <string_view>

#include "stemmer.hpp"

namespace sbs::detail {

namespace {

using std::u32string;
using std::u32string_view;

bool is_vowel(char32_t c) {
  return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' ||
         c == U'y';
}

// The marker 'Y' and w/x never close a short syllable.
bool is_vowel_wxy(char32_t c) {
  return is_vowel(c) || c == U'w' || c == U'x' || c == U'Y';
}

bool ends_with(u32string_view w, u32string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(u32string_view w, u32string_view prefix) {
  return w.size() >= prefix.size() && w.compare(0, prefix.size(), prefix) == 0;
}

// Position after the first non-vowel that follows a vowel, scanning from
// `start`; end of word when there is none.
std::size_t region_after(u32string_view w, std::size_t start) {
  std::size_t i = start;
  while (i < w.size() && !is_vowel(w[i])) ++i;
  if (i >= w.size()) return w.size();
  ++i;
  while (i < w.size() && is_vowel(w[i])) ++i;
  if (i >= w.size()) return w.size();
  return i + 1;
}

// Short syllable ending at `end` (exclusive).
bool short_syllable_at(u32string_view w, std::size_t end) {
  if (end >= 3 && !is_vowel_wxy(w[end - 1]) && is_vowel(w[end - 2]) &&
      !is_vowel(w[end - 3])) {
    return true;
  }
  return end == 2 && !is_vowel(w[end - 1]) && is_vowel(w[end - 2]);
}

struct SuffixRule {
  u32string_view suffix;
  int action;
};

// Exceptional whole-word forms.
struct WordPair {
  u32string_view word;
  u32string_view stem;
};

constexpr std::array<WordPair, 18> kException1 = {{
    {U"skis", U"ski"},
    {U"skies", U"sky"},
    {U"dying", U"die"},
    {U"lying", U"lie"},
    {U"tying", U"tie"},
    {U"idly", U"idl"},
    {U"gently", U"gentl"},
    {U"ugly", U"ugli"},
    {U"early", U"earli"},
    {U"only", U"onli"},
    {U"singly", U"singl"},
    {U"sky", U"sky"},
    {U"news", U"news"},
    {U"howe", U"howe"},
    {U"atlas", U"atlas"},
    {U"cosmos", U"cosmos"},
    {U"bias", U"bias"},
    {U"andes", U"andes"},
}};

constexpr std::array<u32string_view, 8> kException2 = {
    U"inning",  U"outing", U"canning", U"herring",
    U"earring", U"proceed", U"exceed", U"succeed",
};

class Porter2 {
 public:
  explicit Porter2(u32string word) : w_(std::move(word)) {}

  u32string run() {
    for (const auto& [word, stem] : kException1) {
      if (w_ == word) return u32string(stem);
    }
    if (w_.size() < 3) return w_;

    prelude();
    mark_regions();
    step_1a();
    if (!is_exception2()) {
      step_1b();
      step_1c();
      step_2();
      step_3();
      step_4();
      step_5();
    }
    if (y_found_) {
      for (char32_t& c : w_) {
        if (c == U'Y') c = U'y';
      }
    }
    return w_;
  }

 private:
  void prelude() {
    if (!w_.empty() && w_[0] == U'\'') w_.erase(0, 1);
    if (!w_.empty() && w_[0] == U'y') {
      w_[0] = U'Y';
      y_found_ = true;
    }
    for (std::size_t i = 1; i < w_.size(); ++i) {
      if (w_[i] == U'y' && is_vowel(w_[i - 1])) {
        w_[i] = U'Y';
        y_found_ = true;
      }
    }
  }

  void mark_regions() {
    r1_ = u32string::npos;
    for (const u32string_view prefix : {U"gener", U"commun", U"arsen"}) {
      if (starts_with(w_, prefix)) {
        r1_ = prefix.size();
        break;
      }
    }
    if (r1_ == u32string::npos) r1_ = region_after(w_, 0);
    r2_ = region_after(w_, r1_);
  }

  bool in_r1(std::size_t suffix_len) const {
    return w_.size() - suffix_len >= r1_;
  }
  bool in_r2(std::size_t suffix_len) const {
    return w_.size() - suffix_len >= r2_;
  }

  bool ends(u32string_view suffix) const { return ends_with(w_, suffix); }

  void replace(std::size_t n, u32string_view with) {
    w_.replace(w_.size() - n, n, with);
  }

  void step_1a() {
    if (ends(U"'s'")) {
      replace(3, U"");
    } else if (ends(U"'s")) {
      replace(2, U"");
    } else if (ends(U"'")) {
      replace(1, U"");
    }
    if (ends(U"sses")) {
      replace(2, U"");
    } else if (ends(U"ied") || ends(U"ies")) {
      replace(3, w_.size() >= 5 ? U"i" : U"ie");
    } else if (ends(U"us") || ends(U"ss")) {
      // leave alone
    } else if (ends(U"s")) {
      // Delete when some vowel precedes the letter just before the s.
      for (std::size_t i = 0; i + 2 < w_.size(); ++i) {
        if (is_vowel(w_[i])) {
          replace(1, U"");
          break;
        }
      }
    }
  }

  bool is_exception2() const {
    for (const u32string_view word : kException2) {
      if (w_ == word) return true;
    }
    return false;
  }

  void step_1b() {
    std::size_t n = 0;
    bool to_ee = false;
    if (ends(U"eedly")) {
      n = 5;
      to_ee = true;
    } else if (ends(U"ingly") || ends(U"edly")) {
      n = ends(U"ingly") ? 5 : 4;
    } else if (ends(U"eed")) {
      n = 3;
      to_ee = true;
    } else if (ends(U"ing") || ends(U"ed")) {
      n = ends(U"ing") ? 3 : 2;
    } else {
      return;
    }
    if (to_ee) {
      if (in_r1(n)) replace(n, U"ee");
      return;
    }
    bool has_vowel = false;
    for (std::size_t i = 0; i + n < w_.size(); ++i) {
      if (is_vowel(w_[i])) {
        has_vowel = true;
        break;
      }
    }
    if (!has_vowel) return;
    replace(n, U"");
    if (ends(U"at") || ends(U"bl") || ends(U"iz")) {
      w_.push_back(U'e');
    } else if (ends(U"bb") || ends(U"dd") || ends(U"ff") || ends(U"gg") ||
               ends(U"mm") || ends(U"nn") || ends(U"pp") || ends(U"rr") ||
               ends(U"tt")) {
      w_.pop_back();
    } else if (w_.size() == r1_ && short_syllable_at(w_, w_.size())) {
      w_.push_back(U'e');
    }
  }

  void step_1c() {
    const std::size_t n = w_.size();
    if (n < 3) return;
    if ((w_[n - 1] == U'y' || w_[n - 1] == U'Y') && !is_vowel(w_[n - 2])) {
      w_[n - 1] = U'i';
    }
  }

  void step_2() {
    // Longest matching suffix wins; a failed condition ends the step.
    static constexpr std::array<SuffixRule, 24> rules = {{
        {U"ization", 6}, {U"ational", 7}, {U"fulness", 9}, {U"ousness", 10},
        {U"iveness", 11}, {U"tional", 1}, {U"biliti", 12}, {U"lessli", 15},
        {U"ation", 7},   {U"alism", 8},  {U"aliti", 8},   {U"ousli", 10},
        {U"iviti", 11},  {U"fulli", 14}, {U"entli", 5},   {U"enci", 2},
        {U"anci", 3},    {U"abli", 4},   {U"izer", 6},    {U"ator", 7},
        {U"alli", 8},    {U"ogi", 13},   {U"bli", 12},    {U"li", 16},
    }};
    for (const auto& rule : rules) {
      if (!ends(rule.suffix)) continue;
      const std::size_t n = rule.suffix.size();
      if (!in_r1(n)) return;
      switch (rule.action) {
        case 1: replace(n, U"tion"); break;
        case 2: replace(n, U"ence"); break;
        case 3: replace(n, U"ance"); break;
        case 4: replace(n, U"able"); break;
        case 5: replace(n, U"ent"); break;
        case 6: replace(n, U"ize"); break;
        case 7: replace(n, U"ate"); break;
        case 8: replace(n, U"al"); break;
        case 9: replace(n, U"ful"); break;
        case 10: replace(n, U"ous"); break;
        case 11: replace(n, U"ive"); break;
        case 12: replace(n, U"ble"); break;
        case 13:
          if (w_.size() > n && w_[w_.size() - n - 1] == U'l') {
            replace(n, U"og");
          }
          break;
        case 14: replace(n, U"ful"); break;
        case 15: replace(n, U"less"); break;
        case 16: {
          static constexpr u32string_view li = U"cdeghkmnrt";
          if (w_.size() > n &&
              li.find(w_[w_.size() - n - 1]) != u32string_view::npos) {
            replace(n, U"");
          }
          break;
        }
        default: break;
      }
      return;
    }
  }

  void step_3() {
    static constexpr std::array<SuffixRule, 9> rules = {{
        {U"ational", 2}, {U"tional", 1}, {U"alize", 3}, {U"icate", 4},
        {U"iciti", 4},   {U"ative", 6},  {U"ical", 4},  {U"ness", 5},
        {U"ful", 5},
    }};
    for (const auto& rule : rules) {
      if (!ends(rule.suffix)) continue;
      const std::size_t n = rule.suffix.size();
      if (!in_r1(n)) return;
      switch (rule.action) {
        case 1: replace(n, U"tion"); break;
        case 2: replace(n, U"ate"); break;
        case 3: replace(n, U"al"); break;
        case 4: replace(n, U"ic"); break;
        case 5: replace(n, U""); break;
        case 6:
          if (in_r2(n)) replace(n, U"");
          break;
        default: break;
      }
      return;
    }
  }

  void step_4() {
    static constexpr std::array<u32string_view, 18> suffixes = {
        U"ement", U"ance", U"ence", U"able", U"ible", U"ment",
        U"ant",   U"ent",  U"ism",  U"ate",  U"iti",  U"ous",
        U"ive",   U"ize",  U"ion",  U"al",   U"er",   U"ic",
    };
    for (const u32string_view suffix : suffixes) {
      if (!ends(suffix)) continue;
      const std::size_t n = suffix.size();
      if (!in_r2(n)) return;
      if (suffix == U"ion") {
        const char32_t before = w_[w_.size() - n - 1];
        if (before == U's' || before == U't') replace(n, U"");
      } else {
        replace(n, U"");
      }
      return;
    }
  }

  void step_5() {
    if (ends(U"e")) {
      if (in_r2(1) ||
          (in_r1(1) && !short_syllable_at(w_, w_.size() - 1))) {
        replace(1, U"");
      }
      return;
    }
    if (ends(U"l") && in_r2(1) && w_.size() >= 2 &&
        w_[w_.size() - 2] == U'l') {
      replace(1, U"");
    }
  }

  u32string w_;
  std::size_t r1_ = 0;
  std::size_t r2_ = 0;
  bool y_found_ = false;
};

}  // namespace

std::u32string stem_english(std::u32string word) {
  return Porter2(std::move(word)).run();
}

}  // namespace sbs::detail
