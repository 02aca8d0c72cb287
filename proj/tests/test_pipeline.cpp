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

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "error.hpp"
#include "pipeline.hpp"
#include "util.hpp"

using namespace sbs;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("sbs_pipeline_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  fs::path write(const std::string& name, const std::string& content) const {
    const fs::path file = path / name;
    fs::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file;
  }
};

const fs::path kDataDir = SBS_DATA_DIR;

// Minimal valid micro setup: corpus + stopwords + config skeleton.
struct MicroSetup {
  TempDir tmp;
  fs::path config_path;

  explicit MicroSetup(json overrides = json::object()) {
    tmp.write("corpus/d1.txt", "a b a");
    tmp.write("corpus/d2.txt", "wonderful wonderful awful");
    tmp.write("corpus/d3.txt", "hi yo");
    tmp.write("stopwords.txt", "the\n");
    tmp.write("pos.txt", "wonderful\n");
    tmp.write("neg.txt", "awful\n");
    json config = {
        {"corpus_path", "corpus"},
        {"language", "english"},
        {"stopwords_path", "stopwords.txt"},
        {"output_dir", (tmp.path / "out").string()},
    };
    for (const auto& [key, value] : overrides.items()) config[key] = value;
    config_path = tmp.write("config.json", config.dump(2));
  }
};

std::string slurp(const fs::path& p) { return util::read_file(p); }

json parse_file(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST_CASE("validate_config applies defaults") {
  MicroSetup setup;
  const RunConfig cfg = validate_config(setup.config_path);
  CHECK(cfg.window == 5);
  CHECK(cfg.min_weight == 2);
  CHECK(cfg.top_n == 20);
  CHECK(cfg.diversity_mode == DiversityMode::distinctiveness);
  CHECK(cfg.language == Language::english);
  CHECK(!cfg.use_clusters);
}

TEST_CASE("validate_config rejects bad window naming the field") {
  MicroSetup setup(json{{"window", 1}});
  CHECK_THROWS_WITH_AS(validate_config(setup.config_path),
                       doctest::Contains("window"), Error);
}

TEST_CASE("validate_config suggests fixes for unknown fields") {
  MicroSetup setup(json{{"windw", 5}});
  CHECK_THROWS_WITH_AS(validate_config(setup.config_path),
                       doctest::Contains("did you mean \"window\""), Error);
}

TEST_CASE("validate_config names missing paths") {
  MicroSetup setup(json{{"corpus_path", "nowhere"}});
  CHECK_THROWS_WITH_AS(validate_config(setup.config_path),
                       doctest::Contains("nowhere"), Error);
}

TEST_CASE("validate_config requires clusters for use_clusters") {
  MicroSetup setup(json{{"use_clusters", true}});
  CHECK_THROWS_WITH_AS(validate_config(setup.config_path),
                       doctest::Contains("clusters_path"), Error);
}

TEST_CASE("focal_terms and use_clusters are mutually exclusive") {
  MicroSetup setup(json{{"use_clusters", true},
                        {"clusters_path",
                         (kDataDir / "demo_clusters.json").string()},
                        {"focal_terms", {"a", "b"}}});
  CHECK_THROWS_WITH_AS(validate_config(setup.config_path),
                       doctest::Contains("mutually exclusive"), Error);
}

TEST_CASE("overrides update only the three tunables") {
  MicroSetup setup;
  RunConfig cfg = validate_config(setup.config_path);
  apply_override(cfg, "window", 3);
  apply_override(cfg, "min_weight", 1);
  apply_override(cfg, "top_n", 7);
  CHECK(cfg.window == 3);
  CHECK(cfg.min_weight == 1);
  CHECK(cfg.top_n == 7);
  CHECK_THROWS_AS(apply_override(cfg, "language", 1), Error);
  CHECK_THROWS_AS(apply_override(cfg, "window", 0), Error);
}

TEST_CASE("cmd_stats writes hand-checked values") {
  MicroSetup setup(json{{"positive_lexicon_path", "pos.txt"},
                        {"negative_lexicon_path", "neg.txt"}});
  const RunConfig cfg = validate_config(setup.config_path);
  cmd_stats(cfg);
  const json stats = parse_file(cfg.output_dir / "stats.json");
  CHECK(stats["n_docs"] == 3);
  CHECK(stats["tokens_mean"].get<double>() == doctest::Approx(8.0 / 3.0));
  CHECK(stats["types_mean"].get<double>() == 2.0);
  CHECK(stats["ttr_mean"].get<double>() == doctest::Approx(7.0 / 9.0));
  CHECK(stats["six_letter_ratio"].get<double>() == 0.25);
  CHECK(stats["positive_count"] == 2);
  CHECK(stats["negative_count"] == 1);
  CHECK(stats["pos_neg_excess"].get<double>() == doctest::Approx(1.0));
  const std::string csv = slurp(cfg.output_dir / "stats.csv");
  CHECK(csv.find("measure,value\n") == 0);
  CHECK(csv.find("pos_neg_excess,1.000000\n") != std::string::npos);
}

TEST_CASE("cmd_stats without lexicons emits null emotion fields") {
  MicroSetup setup;
  const RunConfig cfg = validate_config(setup.config_path);
  cmd_stats(cfg);
  const json stats = parse_file(cfg.output_dir / "stats.json");
  CHECK(stats["positive_count"].is_null());
  CHECK(stats["pos_neg_excess"].is_null());
}

TEST_CASE("cmd_stats with one lexicon only is a config error") {
  MicroSetup setup(json{{"positive_lexicon_path", "pos.txt"}});
  const RunConfig cfg = validate_config(setup.config_path);
  CHECK_THROWS_WITH_AS(cmd_stats(cfg), doctest::Contains("both"), Error);
}

namespace {

// Demo-corpus analyze config writing into a scratch dir.
RunConfig demo_analyze_config(const TempDir& tmp, json overrides = {}) {
  json config = {
      {"corpus_path", (kDataDir / "demo_corpus").string()},
      {"language", "italian"},
      {"stopwords_path", (kDataDir / "stopwords_it.txt").string()},
      {"clusters_path", (kDataDir / "demo_clusters.json").string()},
      {"use_clusters", true},
      {"output_dir", (tmp.path / "out").string()},
  };
  for (const auto& [key, value] : overrides.items()) config[key] = value;
  const fs::path file = tmp.path / "analyze.json";
  std::ofstream(file) << config.dump(2);
  return validate_config(file);
}

const std::vector<std::string> kAnalyzeOutputs = {
    "network.graphml", "network.dot",   "sbs.csv",
    "sbs.json",        "associations.json", "distances.csv",
    "embedding.csv",   "run_manifest.json"};

}  // namespace

TEST_CASE("cmd_analyze writes the full output set") {
  TempDir tmp;
  const RunConfig cfg = demo_analyze_config(tmp);
  cmd_analyze(cfg);
  for (const std::string& name : kAnalyzeOutputs) {
    CHECK_MESSAGE(fs::exists(cfg.output_dir / name), "missing ", name);
  }
  // 8 cluster labels -> 8 SBS rows plus the header.
  const std::string sbs_csv = slurp(cfg.output_dir / "sbs.csv");
  CHECK(std::count(sbs_csv.begin(), sbs_csv.end(), '\n') == 9);
  // Column count is constant on every row.
  std::size_t commas = std::string::npos;
  std::istringstream lines(sbs_csv);
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t c =
        static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
    if (commas == std::string::npos) {
      commas = c;
    } else {
      CHECK(c == commas);
    }
  }
  // JSON outputs parse; the manifest records the parameters.
  const json manifest = parse_file(cfg.output_dir / "run_manifest.json");
  CHECK(manifest["parameters"]["window"] == 5);
  CHECK(manifest["parameters"]["min_weight"] == 2);
  CHECK(manifest["version"].is_string());
  CHECK(manifest["inputs"]["corpus"]["sha256"].get<std::string>().size() ==
        64);
  const json sbs_json = parse_file(cfg.output_dir / "sbs.json");
  CHECK(sbs_json.is_array());
  CHECK(sbs_json.size() == 8);
  const json assoc = parse_file(cfg.output_dir / "associations.json");
  CHECK(assoc.is_object());
  CHECK(assoc.size() == 8);
  // GraphML sanity.
  const std::string graphml = slurp(cfg.output_dir / "network.graphml");
  CHECK(graphml.rfind("<?xml", 0) == 0);
  CHECK(graphml.find("</graphml>") != std::string::npos);
}

TEST_CASE("cmd_analyze is byte-deterministic apart from the timestamp") {
  TempDir tmp;
  RunConfig cfg = demo_analyze_config(tmp);
  cmd_analyze(cfg);
  std::map<std::string, std::string> first;
  for (const std::string& name : kAnalyzeOutputs) {
    first[name] = slurp(cfg.output_dir / name);
  }
  cmd_analyze(cfg);
  for (const std::string& name : kAnalyzeOutputs) {
    const std::string second = slurp(cfg.output_dir / name);
    if (name == "run_manifest.json") {
      json a = json::parse(first[name]);
      json b = json::parse(second);
      a.erase("generated_at");
      b.erase("generated_at");
      CHECK(a == b);
    } else {
      CHECK_MESSAGE(first[name] == second, name, " differs between runs");
    }
  }
}

TEST_CASE("window override changes results and the manifest") {
  TempDir tmp_a, tmp_b;
  RunConfig narrow = demo_analyze_config(tmp_a);
  apply_override(narrow, "window", 2);
  cmd_analyze(narrow);
  const RunConfig wide = demo_analyze_config(tmp_b);
  cmd_analyze(wide);
  CHECK(slurp(narrow.output_dir / "sbs.csv") !=
        slurp(wide.output_dir / "sbs.csv"));
  CHECK(parse_file(narrow.output_dir / "run_manifest.json")["parameters"]
            ["window"] == 2);
  CHECK(parse_file(wide.output_dir / "run_manifest.json")["parameters"]
            ["window"] == 5);
}

TEST_CASE("missing focal terms fail with stems and suggestions") {
  TempDir tmp;
  const RunConfig cfg = demo_analyze_config(
      tmp, json{{"use_clusters", false},
                {"focal_terms", {"piacere", "sensazione", "zzzqqq"}}});
  try {
    cmd_analyze(cfg);
    FAIL("expected a lookup error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::lookup);
    CHECK(std::string(e.what()).find("zzzqqq") != std::string::npos);
  }
}

TEST_CASE("fewer than three focal terms is a config error") {
  TempDir tmp;
  const RunConfig cfg = demo_analyze_config(
      tmp,
      json{{"use_clusters", false}, {"focal_terms", {"piacere", "stile"}}});
  CHECK_THROWS_WITH_AS(cmd_analyze(cfg), doctest::Contains("at least 3"),
                       Error);
}

TEST_CASE("cli runs the demo analysis end to end") {
  TempDir tmp;
  json config = {
      {"corpus_path", (kDataDir / "demo_corpus").string()},
      {"language", "italian"},
      {"stopwords_path", (kDataDir / "stopwords_it.txt").string()},
      {"clusters_path", (kDataDir / "demo_clusters.json").string()},
      {"use_clusters", true},
      {"output_dir", (tmp.path / "out").string()},
  };
  const fs::path config_file = tmp.write("config.json", config.dump());
  const std::string cmd = std::string(SBS_CLI_PATH) + " analyze --config " +
                          config_file.string() + " 2>/dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  for (const std::string& name : kAnalyzeOutputs) {
    CHECK(fs::exists(tmp.path / "out" / name));
  }
  const std::string stats_cmd = std::string(SBS_CLI_PATH) +
                                " stats --config " + config_file.string() +
                                " 2>/dev/null";
  CHECK(std::system(stats_cmd.c_str()) == 0);
  CHECK(fs::exists(tmp.path / "out" / "stats.json"));
}

TEST_CASE("cli reports failures with a nonzero exit") {
  const std::string cmd =
      std::string(SBS_CLI_PATH) + " analyze --config /no/such/file 2>/dev/null";
  CHECK(std::system(cmd.c_str()) != 0);
}

TEST_CASE("cli --window override lands in the manifest") {
  TempDir tmp;
  json config = {
      {"corpus_path", (kDataDir / "demo_corpus").string()},
      {"language", "italian"},
      {"stopwords_path", (kDataDir / "stopwords_it.txt").string()},
      {"clusters_path", (kDataDir / "demo_clusters.json").string()},
      {"use_clusters", true},
      {"output_dir", (tmp.path / "out").string()},
  };
  const fs::path config_file = tmp.write("config.json", config.dump());
  const std::string cmd = std::string(SBS_CLI_PATH) + " analyze --config " +
                          config_file.string() + " --window 3 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  const json manifest = parse_file(tmp.path / "out" / "run_manifest.json");
  CHECK(manifest["parameters"]["window"] == 3);
}
