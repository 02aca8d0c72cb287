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

#ifndef SBS_PIPELINE_HPP_
#define SBS_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "metrics.hpp"
#include "stemmer.hpp"

namespace sbs {

/// A fully validated run configuration. Input paths in the config file are
/// resolved relative to the file's directory; output_dir is resolved against
/// the working directory.
struct RunConfig {
  std::filesystem::path corpus_path;
  Language language = Language::italian;
  std::filesystem::path stopwords_path;
  std::optional<std::filesystem::path> positive_lexicon_path;
  std::optional<std::filesystem::path> negative_lexicon_path;
  std::optional<std::filesystem::path> clusters_path;
  int window = 5;
  int min_weight = 2;
  DiversityMode diversity_mode = DiversityMode::distinctiveness;
  bool keep_digits = false;
  std::vector<std::string> focal_terms;  // surface words, stemmed at lookup
  bool use_clusters = false;             // focal terms = cluster labels
  std::uint64_t top_n = 20;
  std::filesystem::path output_dir;

  // Values as written in the config file, echoed into the manifest.
  std::string corpus_path_raw;
  std::string stopwords_path_raw;
  std::string positive_lexicon_path_raw;
  std::string negative_lexicon_path_raw;
  std::string clusters_path_raw;
};

// Parses and validates a JSON config. Unknown fields are rejected with a
// suggestion; every violated constraint names its field.
RunConfig validate_config(const std::filesystem::path& path);

// CLI overrides for window, min_weight and top_n.
void apply_override(RunConfig& config, std::string_view key, long long value);

// Writes stats.json and stats.csv into output_dir.
void cmd_stats(const RunConfig& config);

// Runs the full pipeline and writes network.graphml, network.dot, sbs.csv,
// sbs.json, associations.json, distances.csv, embedding.csv and
// run_manifest.json into output_dir.
void cmd_analyze(const RunConfig& config);

}  // namespace sbs

#endif  // SBS_PIPELINE_HPP_
