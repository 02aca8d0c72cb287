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

// Snowball Italian stemmer,
// https://snowballstem.org/algorithms/italian/stemmer.html

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "stemmer.hpp"

namespace sbs::detail {

namespace {

using std::u32string;
using std::u32string_view;

constexpr char32_t kAGrave = U'à';  // à
constexpr char32_t kEGrave = U'è';  // è
constexpr char32_t kIGrave = U'ì';  // ì
constexpr char32_t kOGrave = U'ò';  // ò
constexpr char32_t kUGrave = U'ù';  // ù

bool is_vowel(char32_t c) {
  return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' ||
         c == kAGrave || c == kEGrave || c == kIGrave || c == kOGrave ||
         c == kUGrave;
}

bool ends_with(u32string_view w, u32string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Attached pronouns, longest first.
constexpr std::array<u32string_view, 37> kPronouns = {
    U"gliela", U"gliele", U"glieli", U"glielo", U"gliene", U"sene",
    U"cela",   U"cele",   U"celi",   U"celo",   U"cene",   U"mela",
    U"mele",   U"meli",   U"melo",   U"mene",   U"tela",   U"tele",
    U"teli",   U"telo",   U"tene",   U"vela",   U"vele",   U"veli",
    U"velo",   U"vene",   U"gli",    U"ci",     U"la",     U"le",
    U"li",     U"lo",     U"mi",     U"ne",     U"si",     U"ti",
    U"vi",
};

struct SuffixRule {
  u32string_view suffix;
  int action;
};

// Step 1 (standard suffixes), longest first. Actions:
//   1 delete in R2
//   2 delete in R2, then a preceding "ic" in R2
//   3 replace with "log" in R2
//   4 replace with "u" in R2
//   5 replace with "ente" in R2
//   6 delete in RV
//   7 "amente": delete in R1, then preceding iv(+at) or os/ic/abil in R2
//   8 "ità": delete in R2, then preceding abil/ic/iv in R2
//   9 "ivX": delete in R2, then preceding at(+ic) in R2
constexpr std::array<SuffixRule, 51> kStandardSuffixes = {{
    {U"atrice", 1}, {U"atrici", 1}, {U"azione", 2}, {U"azioni", 2},
    {U"uzione", 4}, {U"uzioni", 4}, {U"usione", 4}, {U"usioni", 4},
    {U"amento", 6}, {U"amenti", 6}, {U"imento", 6}, {U"imenti", 6},
    {U"amente", 7}, {U"abile", 1},  {U"abili", 1},  {U"ibile", 1},
    {U"ibili", 1},  {U"logia", 3},  {U"logie", 3},  {U"atore", 2},
    {U"atori", 2},  {U"mente", 1},  {U"anza", 1},   {U"anze", 1},
    {U"iche", 1},   {U"ichi", 1},   {U"ismo", 1},   {U"ismi", 1},
    {U"ista", 1},   {U"iste", 1},   {U"isti", 1},
    {U"istà", 1}, {U"istè", 1}, {U"istì", 1},
    {U"enza", 5},   {U"enze", 5},   {U"ante", 1},   {U"anti", 1},
    {U"ico", 1},    {U"ici", 1},    {U"ica", 1},    {U"ice", 1},
    {U"oso", 1},    {U"osi", 1},    {U"osa", 1},    {U"ose", 1},
    {U"ità", 8},
    {U"ivo", 9},    {U"ivi", 9},    {U"iva", 9},    {U"ive", 9},
}};

// Step 2 (verb suffixes), deleted when inside RV; longest first.
constexpr std::array<u32string_view, 87> kVerbSuffixes = {
    U"erebbero", U"irebbero", U"assero",   U"assimo",  U"eranno",
    U"erebbe",   U"eremmo",   U"ereste",   U"eresti",  U"essero",
    U"iranno",   U"irebbe",   U"iremmo",   U"ireste",  U"iresti",
    U"iscano",   U"iscono",   U"issero",   U"arono",   U"avamo",
    U"avano",    U"avate",    U"eremo",    U"erete",   U"erono",
    U"evamo",    U"evano",    U"evate",    U"iremo",   U"irete",
    U"irono",    U"ivamo",    U"ivano",    U"ivate",   U"ammo",
    U"ando",     U"asse",     U"assi",     U"emmo",    U"enda",
    U"ende",     U"endi",     U"endo",     U"erai",    U"erei",
    U"Yamo",     U"iamo",     U"immo",     U"irai",    U"irei",
    U"isca",     U"isce",     U"isci",     U"isco",    U"ano",
    U"are",      U"ata",      U"ate",      U"ati",     U"ato",
    U"ava",      U"avi",      U"avo",      U"erà", U"ere",
    U"erò", U"ete",      U"eva",      U"evi",     U"evo",
    U"irà", U"ire",      U"irò", U"ita",     U"ite",
    U"iti",      U"ito",      U"iva",      U"ivi",     U"ivo",
    U"ono",      U"uta",      U"ute",      U"uti",     U"uto",
    U"ar",       U"ir",
};

class ItalianStemmer {
 public:
  explicit ItalianStemmer(u32string word) : w_(std::move(word)) {}

  u32string run() {
    prelude();
    mark_regions();
    attached_pronoun();
    if (!standard_suffix()) verb_suffix();
    vowel_suffix();
    postlude();
    return w_;
  }

 private:
  void prelude() {
    // Acute accents become grave; u after q and u/i between vowels are
    // marked uppercase so they act as consonants.
    for (std::size_t i = 0; i < w_.size(); ++i) {
      switch (w_[i]) {
        case U'á': w_[i] = kAGrave; break;
        case U'é': w_[i] = kEGrave; break;
        case U'í': w_[i] = kIGrave; break;
        case U'ó': w_[i] = kOGrave; break;
        case U'ú': w_[i] = kUGrave; break;
        case U'q':
          if (i + 1 < w_.size() && w_[i + 1] == U'u') {
            w_[i + 1] = U'U';
            ++i;
          }
          break;
        default: break;
      }
    }
    std::size_t p = 0;
    while (p + 2 < w_.size()) {
      if (is_vowel(w_[p]) && (w_[p + 1] == U'u' || w_[p + 1] == U'i') &&
          is_vowel(w_[p + 2])) {
        w_[p + 1] = (w_[p + 1] == U'u') ? U'U' : U'I';
        p += 2;
      } else {
        ++p;
      }
    }
  }

  void mark_regions() {
    const std::size_t n = w_.size();
    rv_ = n;
    r1_ = n;
    r2_ = n;
    if (n >= 2) {
      if (is_vowel(w_[0])) {
        if (!is_vowel(w_[1])) {
          // After the next vowel.
          for (std::size_t i = 2; i < n; ++i) {
            if (is_vowel(w_[i])) {
              rv_ = i + 1;
              break;
            }
          }
        } else {
          // After the next non-vowel.
          for (std::size_t i = 2; i < n; ++i) {
            if (!is_vowel(w_[i])) {
              rv_ = i + 1;
              break;
            }
          }
        }
      } else {
        if (!is_vowel(w_[1])) {
          for (std::size_t i = 2; i < n; ++i) {
            if (is_vowel(w_[i])) {
              rv_ = i + 1;
              break;
            }
          }
        } else if (n > 2) {
          rv_ = 3;
        }
      }
    }
    r1_ = region_after(0);
    r2_ = region_after(r1_);
  }

  std::size_t region_after(std::size_t start) const {
    std::size_t i = start;
    const std::size_t n = w_.size();
    while (i < n && !is_vowel(w_[i])) ++i;
    if (i >= n) return n;
    ++i;
    while (i < n && is_vowel(w_[i])) ++i;
    if (i >= n) return n;
    return i + 1;
  }

  bool in_rv(std::size_t pos) const { return pos >= rv_; }
  bool suffix_in_r1(std::size_t len) const { return w_.size() - len >= r1_; }
  bool suffix_in_r2(std::size_t len) const { return w_.size() - len >= r2_; }

  bool ends(u32string_view suffix) const { return ends_with(w_, suffix); }

  void drop(std::size_t n) { w_.erase(w_.size() - n); }

  // Deletes a preceding simple suffix when it lies in R2.
  bool drop_if_r2(u32string_view suffix) {
    if (ends(suffix) && suffix_in_r2(suffix.size())) {
      drop(suffix.size());
      return true;
    }
    return false;
  }

  void attached_pronoun() {
    std::size_t pron = 0;
    for (const u32string_view p : kPronouns) {
      if (ends(p)) {
        pron = p.size();
        break;
      }
    }
    if (pron == 0) return;
    const std::size_t base = w_.size() - pron;
    const u32string_view rest(w_.data(), base);
    if ((ends_with(rest, U"ando") || ends_with(rest, U"endo")) &&
        in_rv(base - 4)) {
      drop(pron);
    } else if ((ends_with(rest, U"ar") || ends_with(rest, U"er") ||
                ends_with(rest, U"ir")) &&
               base >= 2 && in_rv(base - 2)) {
      w_.replace(base, pron, U"e");
    }
  }

  bool standard_suffix() {
    for (const auto& rule : kStandardSuffixes) {
      if (!ends(rule.suffix)) continue;
      const std::size_t n = rule.suffix.size();
      switch (rule.action) {
        case 1:
          if (!suffix_in_r2(n)) return false;
          drop(n);
          return true;
        case 2:
          if (!suffix_in_r2(n)) return false;
          drop(n);
          drop_if_r2(U"ic");
          return true;
        case 3:
          if (!suffix_in_r2(n)) return false;
          drop(n - 3);  // keep "log"
          return true;
        case 4:
          if (!suffix_in_r2(n)) return false;
          drop(n - 1);  // keep "u"
          return true;
        case 5:
          if (!suffix_in_r2(n)) return false;
          w_.replace(w_.size() - n, n, U"ente");
          return true;
        case 6:
          if (!in_rv(w_.size() - n)) return false;
          drop(n);
          return true;
        case 7:
          if (!suffix_in_r1(n)) return false;
          drop(n);
          if (drop_if_r2(U"iv")) {
            drop_if_r2(U"at");
          } else if (!drop_if_r2(U"os") && !drop_if_r2(U"ic")) {
            drop_if_r2(U"abil");
          }
          return true;
        case 8:
          if (!suffix_in_r2(n)) return false;
          drop(n);
          if (!drop_if_r2(U"abil") && !drop_if_r2(U"ic")) drop_if_r2(U"iv");
          return true;
        case 9:
          if (!suffix_in_r2(n)) return false;
          drop(n);
          if (drop_if_r2(U"at")) drop_if_r2(U"ic");
          return true;
        default: return false;
      }
    }
    return false;
  }

  void verb_suffix() {
    // The whole suffix has to lie inside RV; shorter candidates are tried
    // when a longer one crosses the RV boundary.
    for (const u32string_view suffix : kVerbSuffixes) {
      if (ends(suffix) && w_.size() - suffix.size() >= rv_) {
        drop(suffix.size());
        return;
      }
    }
  }

  void vowel_suffix() {
    if (!w_.empty()) {
      const char32_t last = w_.back();
      if ((last == U'a' || last == U'e' || last == U'i' || last == U'o' ||
           last == kAGrave || last == kEGrave || last == kIGrave ||
           last == kOGrave) &&
          in_rv(w_.size() - 1)) {
        w_.pop_back();
        if (!w_.empty() && w_.back() == U'i' && in_rv(w_.size() - 1)) {
          w_.pop_back();
        }
      }
    }
    if (w_.size() >= 2 && w_.back() == U'h' &&
        (w_[w_.size() - 2] == U'c' || w_[w_.size() - 2] == U'g') &&
        in_rv(w_.size() - 2)) {
      w_.pop_back();
    }
  }

  void postlude() {
    for (char32_t& c : w_) {
      if (c == U'I') c = U'i';
      if (c == U'U') c = U'u';
    }
  }

  u32string w_;
  std::size_t rv_ = 0;
  std::size_t r1_ = 0;
  std::size_t r2_ = 0;
};

}  // namespace

std::u32string stem_italian(std::u32string word) {
  return ItalianStemmer(std::move(word)).run();
}

}  // namespace sbs::detail
