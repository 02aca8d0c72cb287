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

// Command-line front end; everything goes through the C API in sbs.h.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "sbs.h"

namespace {

struct ConfigCloser {
  void operator()(sbs_config* config) const { sbs_config_close(config); }
};
using ConfigHandle = std::unique_ptr<sbs_config, ConfigCloser>;

int fail(sbs_status status) {
  std::fprintf(stderr, "sbs: error (%s): %s\n", sbs_status_name(status),
               sbs_last_error());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus analytics: co-occurrence networks and semantic "
               "brand scores"};
  app.set_version_flag("--version", std::string(sbs_version()));
  app.require_subcommand(1);

  std::string config_path;
  long long window = -1;
  long long min_weight = -1;
  long long top_n = -1;

  CLI::App* stats =
      app.add_subcommand("stats", "Corpus descriptive statistics");
  stats->add_option("--config", config_path, "Run configuration (JSON)")
      ->required();

  CLI::App* analyze =
      app.add_subcommand("analyze", "Full network and SBS analysis");
  analyze->add_option("--config", config_path, "Run configuration (JSON)")
      ->required();
  analyze->add_option("--window", window, "Co-occurrence window override");
  analyze->add_option("--min-weight", min_weight,
                      "Minimum arc weight override");
  analyze->add_option("--top-n", top_n, "Association list length override");

  CLI11_PARSE(app, argc, argv);

  sbs_config* raw = nullptr;
  sbs_status status = sbs_config_open(config_path.c_str(), &raw);
  if (status != SBS_OK) return fail(status);
  ConfigHandle config(raw);

  if (analyze->parsed()) {
    if (window >= 0 &&
        (status = sbs_config_override_int(config.get(), "window", window)) !=
            SBS_OK) {
      return fail(status);
    }
    if (min_weight >= 0 &&
        (status = sbs_config_override_int(config.get(), "min_weight",
                                          min_weight)) != SBS_OK) {
      return fail(status);
    }
    if (top_n >= 0 &&
        (status = sbs_config_override_int(config.get(), "top_n", top_n)) !=
            SBS_OK) {
      return fail(status);
    }
    status = sbs_run_analyze(config.get());
  } else {
    status = sbs_run_stats(config.get());
  }
  if (status != SBS_OK) return fail(status);
  return 0;
}
