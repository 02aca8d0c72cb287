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

#ifndef SBS_STEMMER_HPP_
#define SBS_STEMMER_HPP_

#include <string>
#include <string_view>

namespace sbs {

enum class Language { english, italian };

// Throws Error(config) for unsupported names.
Language language_from_name(std::string_view name);
std::string_view language_name(Language language);

// Snowball stemming (english: Porter2, italian: the Snowball Italian
// algorithm, see https://snowballstem.org/algorithms/). Input is lowercased
// first; the result of stemming a stem again is not guaranteed to be the
// same stem. Throws Error(validation) for empty words.
std::string stem_word(std::string_view word, Language language);

namespace detail {
// Operate on already-lowercased codepoints.
std::u32string stem_english(std::u32string word);
std::u32string stem_italian(std::u32string word);
}  // namespace detail

}  // namespace sbs

#endif  // SBS_STEMMER_HPP_
