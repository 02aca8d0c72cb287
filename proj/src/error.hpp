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

#ifndef SBS_ERROR_HPP_
#define SBS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sbs {

enum class ErrorKind {
  io,          // unreadable paths, failed writes
  validation,  // malformed or inconsistent input data
  config,      // bad run configuration (unknown fields, bad values)
  lookup,      // a requested term is not a node
  degenerate,  // numerically degenerate result (e.g. rank-deficient MDS)
  internal,
};

const char* error_kind_name(ErrorKind kind);

/// All failures in the engine are reported as Error. The message always
/// starts with "<module>: " so callers can surface where it came from.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::io: return "io";
    case ErrorKind::validation: return "validation";
    case ErrorKind::config: return "config";
    case ErrorKind::lookup: return "lookup";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

}  // namespace sbs

#endif  // SBS_ERROR_HPP_
