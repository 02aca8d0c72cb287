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

#ifndef SBS_UTIL_HPP_
#define SBS_UTIL_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace sbs::util {

// Reads a whole file as bytes; throws Error(io) naming the path.
std::string read_file(const std::filesystem::path& path);

// Writes via a temporary file in the same directory followed by a rename,
// so readers never observe a partially written file.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// Fixed 6-decimal rendering used by all CSV outputs. Values that round to
// zero are printed as "0.000000" (never "-0.000000").
std::string format_fixed6(double value);

// RFC 4180 quoting, applied only when the field needs it.
std::string csv_field(std::string_view s);

std::string xml_escape(std::string_view s);
std::string dot_escape(std::string_view s);

std::size_t levenshtein(std::string_view a, std::string_view b);

std::string sha256_hex(std::string_view data);

}  // namespace sbs::util

#endif  // SBS_UTIL_HPP_
