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

#include "sbs.h"

#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "pipeline.hpp"
#include "stemmer.hpp"
#include "version.hpp"

struct sbs_config {
  sbs::RunConfig config;
};

namespace {

thread_local std::string g_last_error;

sbs_status status_of(sbs::ErrorKind kind) {
  switch (kind) {
    case sbs::ErrorKind::io: return SBS_ERR_IO;
    case sbs::ErrorKind::validation: return SBS_ERR_VALIDATION;
    case sbs::ErrorKind::config: return SBS_ERR_CONFIG;
    case sbs::ErrorKind::lookup: return SBS_ERR_LOOKUP;
    case sbs::ErrorKind::degenerate: return SBS_ERR_DEGENERATE;
    case sbs::ErrorKind::internal: return SBS_ERR_INTERNAL;
  }
  return SBS_ERR_INTERNAL;
}

// run() must return sbs_status; any thrown error becomes a status plus a
// thread-local message.
template <typename Fn>
sbs_status guarded(Fn&& run) {
  try {
    g_last_error.clear();
    return run();
  } catch (const sbs::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SBS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SBS_ERR_INTERNAL;
  }
}

sbs_status invalid_argument(const char* message) {
  g_last_error = message;
  return SBS_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* sbs_version(void) { return sbs::kVersion; }

const char* sbs_status_name(sbs_status status) {
  switch (status) {
    case SBS_OK: return "ok";
    case SBS_ERR_IO: return "io";
    case SBS_ERR_VALIDATION: return "validation";
    case SBS_ERR_CONFIG: return "config";
    case SBS_ERR_LOOKUP: return "lookup";
    case SBS_ERR_DEGENERATE: return "degenerate";
    case SBS_ERR_ARGUMENT: return "argument";
    case SBS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sbs_last_error(void) { return g_last_error.c_str(); }

sbs_status sbs_config_open(const char* path, sbs_config** out_config) {
  if (path == nullptr || out_config == nullptr) {
    return invalid_argument("sbs_config_open: path and out_config required");
  }
  *out_config = nullptr;
  return guarded([&]() {
    auto* handle = new sbs_config{sbs::validate_config(path)};
    *out_config = handle;
    return SBS_OK;
  });
}

sbs_status sbs_config_override_int(sbs_config* config, const char* key,
                                   long long value) {
  if (config == nullptr || key == nullptr) {
    return invalid_argument(
        "sbs_config_override_int: config and key required");
  }
  return guarded([&]() {
    sbs::apply_override(config->config, key, value);
    return SBS_OK;
  });
}

void sbs_config_close(sbs_config* config) { delete config; }

sbs_status sbs_run_stats(const sbs_config* config) {
  if (config == nullptr) {
    return invalid_argument("sbs_run_stats: config required");
  }
  return guarded([&]() {
    sbs::cmd_stats(config->config);
    return SBS_OK;
  });
}

sbs_status sbs_run_analyze(const sbs_config* config) {
  if (config == nullptr) {
    return invalid_argument("sbs_run_analyze: config required");
  }
  return guarded([&]() {
    sbs::cmd_analyze(config->config);
    return SBS_OK;
  });
}

sbs_status sbs_stem_word(const char* language, const char* word, char* buffer,
                         size_t buffer_size) {
  if (language == nullptr || word == nullptr || buffer == nullptr) {
    return invalid_argument(
        "sbs_stem_word: language, word and buffer required");
  }
  return guarded([&]() -> sbs_status {
    const std::string stem =
        sbs::stem_word(word, sbs::language_from_name(language));
    if (stem.size() + 1 > buffer_size) {
      g_last_error = "sbs_stem_word: buffer too small (need " +
                     std::to_string(stem.size() + 1) + " bytes)";
      return SBS_ERR_ARGUMENT;
    }
    std::memcpy(buffer, stem.c_str(), stem.size() + 1);
    return SBS_OK;
  });
}

}  // extern "C"
