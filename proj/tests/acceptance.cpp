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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero when anything fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "corpus.hpp"
#include "metrics.hpp"
#include "oracles.hpp"
#include "pipeline.hpp"
#include "semantics.hpp"
#include "stemmer.hpp"
#include "textprep.hpp"
#include "util.hpp"

using namespace sbs;
using namespace sbs_test;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = SBS_DATA_DIR;
const fs::path kTestDataDir = SBS_TEST_DATA_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

int g_failures = 0;

void run(const std::string& name, const Criterion& criterion) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = criterion();
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("%s %-38s (%.2fs)%s%s\n", outcome.ok ? "PASS" : "FAIL",
              name.c_str(), seconds, outcome.detail.empty() ? "" : " – ",
              outcome.detail.c_str());
  std::fflush(stdout);
  if (!outcome.ok) ++g_failures;
}

fs::path scratch_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() /
                       ("sbs_acceptance_" + std::to_string(::getpid()) + "_" +
                        tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// -------------------------------------------------------------- criterion 1

Outcome cooccurrence_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<int> window_dist(2, 6);
  std::uniform_int_distribution<int> weight_dist(1, 3);
  for (int round = 0; round < 200; ++round) {
    const auto corpus = random_corpus(rng, 10, 50, 10);
    const int window = window_dist(rng);
    const int min_weight = weight_dist(rng);
    const CoocOracle oracle =
        brute_force_cooccurrence(corpus, window, min_weight);
    const CooccurrenceNetwork net =
        build_network(as_processed(corpus), {window, min_weight});
    std::map<std::pair<std::string, std::string>, std::uint64_t> got_edges;
    for (const auto& e : net.edges()) {
      got_edges[{net.term(e.u), net.term(e.v)}] = e.weight;
    }
    std::map<std::string, std::uint64_t> got_freq;
    for (std::uint32_t id = 0; id < net.node_count(); ++id) {
      got_freq[net.term(id)] = net.frequency(id);
    }
    if (got_edges != oracle.edges || got_freq != oracle.freq) {
      return {false, "mismatch on corpus " + std::to_string(round)};
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds >= 10.0) {
    return {false, "took " + std::to_string(seconds) + "s (limit 10s)"};
  }
  return {true, "200 corpora exact"};
}

// -------------------------------------------------------------- criterion 2

Outcome betweenness_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(424242);
  for (int round = 0; round < 100; ++round) {
    const RandomGraph g = random_connected_graph(rng, 3, 8, 5);
    const CooccurrenceNetwork net = from_graph(g);
    const std::vector<double> got = betweenness_all(net);
    const std::vector<double> want = brute_force_betweenness(g.n, g.edges);
    for (std::size_t v = 0; v < g.n; ++v) {
      if (std::abs(got[v] - want[v]) > 1e-9) {
        return {false, "graph " + std::to_string(round) + " node " +
                           std::to_string(v) + ": got " +
                           std::to_string(got[v]) + ", want " +
                           std::to_string(want[v])};
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds >= 60.0) {
    return {false, "took " + std::to_string(seconds) + "s (limit 60s)"};
  }
  return {true, "100 graphs within 1e-9"};
}

// -------------------------------------------------------------- criterion 3

Outcome analytic_fixtures() {
  {
    const CooccurrenceNetwork path = make_net({{"a", "b", 1}, {"b", "c", 1}});
    const auto bc = connectivity(path, {"a", "b", "c"});
    if (bc.at("a") != 0.0 || bc.at("b") != 1.0 || bc.at("c") != 0.0) {
      return {false, "path fixture"};
    }
  }
  for (int k = 3; k <= 6; ++k) {
    std::vector<std::tuple<std::string, std::string, std::uint64_t>> edges;
    for (int leaf = 0; leaf < k; ++leaf) {
      edges.push_back({"center", "leaf" + std::to_string(leaf), 1});
    }
    const CooccurrenceNetwork star = make_net(edges);
    const auto bc = connectivity(star, {"center"});
    if (bc.at("center") != k * (k - 1) / 2.0) {
      return {false, "star fixture k=" + std::to_string(k)};
    }
  }
  {
    const CooccurrenceNetwork triangle =
        make_net({{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 1}});
    const auto bc = connectivity(triangle, {"a", "b", "c"});
    if (bc.at("b") != 1.0 || bc.at("a") != 0.0 || bc.at("c") != 0.0) {
      return {false, "weighted triangle fixture"};
    }
  }
  return {true, "path, stars k=3..6, weighted triangle exact"};
}

// -------------------------------------------------------------- criterion 4

Outcome standardization() {
  std::mt19937 rng(515151);
  int networks = 0;
  while (networks < 50) {
    const auto corpus = random_corpus(rng, 8, 40, 8);
    CooccurrenceNetwork net = build_network(as_processed(corpus), {4, 1});
    if (net.node_count() < 2) continue;
    ++networks;
    std::set<std::string> all(net.terms().begin(), net.terms().end());
    const auto reports = sbs_scores(net, all, DiversityMode::distinctiveness);
    const auto check = [&](auto raw_of, auto z_of, const char* label) {
      bool constant = true;
      for (const auto& r : reports) {
        if (raw_of(r) != raw_of(reports.front())) constant = false;
      }
      if (constant) {
        for (const auto& r : reports) {
          if (z_of(r) != 0.0) {
            return std::string(label) + ": constant component with nonzero z";
          }
        }
        return std::string();
      }
      double mean = 0.0;
      for (const auto& r : reports) mean += z_of(r);
      mean /= static_cast<double>(reports.size());
      double var = 0.0;
      for (const auto& r : reports) {
        var += (z_of(r) - mean) * (z_of(r) - mean);
      }
      var /= static_cast<double>(reports.size());
      if (std::abs(mean) >= 1e-9) {
        return std::string(label) + ": |mean(z)| = " + std::to_string(mean);
      }
      if (std::abs(var - 1.0) >= 1e-9) {
        return std::string(label) + ": |var(z)-1| = " +
               std::to_string(std::abs(var - 1.0));
      }
      return std::string();
    };
    for (const auto& [raw_of, z_of, label] :
         {std::tuple{+[](const SbsReport& r) { return double(r.prevalence); },
                     +[](const SbsReport& r) { return r.z_prevalence; },
                     "prevalence"},
          std::tuple{+[](const SbsReport& r) { return r.diversity; },
                     +[](const SbsReport& r) { return r.z_diversity; },
                     "diversity"},
          std::tuple{+[](const SbsReport& r) { return r.connectivity; },
                     +[](const SbsReport& r) { return r.z_connectivity; },
                     "connectivity"}}) {
      const std::string problem = check(raw_of, z_of, label);
      if (!problem.empty()) return {false, problem};
    }
  }
  return {true, "50 networks within 1e-9"};
}

// -------------------------------------------------------------- criterion 5

Outcome affine_invariance() {
  std::mt19937 rng(998877);
  for (int round = 0; round < 20; ++round) {
    const RandomGraph g = random_connected_graph(rng, 4, 8, 5);
    const CooccurrenceNetwork base = from_graph(g);
    const CooccurrenceNetwork scaled = from_graph(g, 10);
    std::set<std::string> all(base.terms().begin(), base.terms().end());
    const auto a = sbs_scores(base, all, DiversityMode::distinctiveness);
    const auto b = sbs_scores(scaled, all, DiversityMode::distinctiveness);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].term != b[i].term ||
          std::abs(a[i].z_prevalence - b[i].z_prevalence) > 1e-9 ||
          std::abs(a[i].z_diversity - b[i].z_diversity) > 1e-9 ||
          std::abs(a[i].z_connectivity - b[i].z_connectivity) > 1e-9 ||
          std::abs(a[i].sbs - b[i].sbs) > 1e-9) {
        return {false, "graph " + std::to_string(round) + ", term " +
                           a[i].term};
      }
    }
  }
  return {true, "weights x10 leave z and SBS unchanged"};
}

// -------------------------------------------------------------- criterion 6

Outcome stemmer_conformance() {
  for (const auto& [file, language] :
       {std::pair{"snowball_english_golden.tsv", Language::english},
        std::pair{"snowball_italian_golden.tsv", Language::italian}}) {
    std::ifstream in(kTestDataDir / file);
    if (!in.good()) return {false, std::string("missing ") + file};
    std::string line;
    std::size_t total = 0, mismatches = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto tab = line.find('\t');
      const std::string word = line.substr(0, tab);
      const std::string want = line.substr(tab + 1);
      ++total;
      if (stem_word(word, language) != want) ++mismatches;
    }
    const double agreement =
        1.0 - static_cast<double>(mismatches) / static_cast<double>(total);
    if (agreement < 0.999) {
      return {false, std::string(file) + ": agreement " +
                         std::to_string(agreement)};
    }
  }
  return {true, "english and italian golden files >= 99.9%"};
}

// -------------------------------------------------------------- criterion 7

Outcome table1_format() {
  // Bundled demo corpus: all six Table-1 statistics present.
  const fs::path dir = scratch_dir("stats");
  {
    std::ofstream config(dir / "stats.json");
    config << "{\n"
           << "  \"corpus_path\": \"" << (kDataDir / "demo_corpus").string()
           << "\",\n  \"language\": \"italian\",\n"
           << "  \"stopwords_path\": \""
           << (kDataDir / "stopwords_it.txt").string() << "\",\n"
           << "  \"positive_lexicon_path\": \""
           << (kDataDir / "lexicon_positive_it.txt").string() << "\",\n"
           << "  \"negative_lexicon_path\": \""
           << (kDataDir / "lexicon_negative_it.txt").string() << "\",\n"
           << "  \"output_dir\": \"" << (dir / "out").string() << "\"\n}\n";
  }
  cmd_stats(validate_config(dir / "stats.json"));
  const auto stats = nlohmann::json::parse(
      util::read_file(dir / "out" / "stats.json"));
  for (const char* key : {"tokens_mean", "tokens_sd", "types_mean",
                          "types_sd", "ttr_mean", "ttr_sd"}) {
    if (!stats.contains(key) || !stats[key].is_number()) {
      return {false, std::string("demo stats missing ") + key};
    }
  }
  // Micro corpus: hand-computed values, exact.
  const std::vector<Document> docs = {
      {"d1", "a b a", ""},
      {"d2", "wonderful wonderful awful", ""},
      {"d3", "hi yo", ""},
  };
  Lexicon pos{"pos", {"wonderful"}};
  Lexicon neg{"neg", {"awful"}};
  const CorpusStats micro = corpus_stats(docs, pos, neg);
  if (micro.tokens_mean != 8.0 / 3.0) return {false, "micro tokens_mean"};
  if (micro.types_mean != 2.0) return {false, "micro types_mean"};
  if (micro.ttr_mean != (2.0 / 3.0 + 2.0 / 3.0 + 1.0) / 3.0) {
    return {false, "micro ttr_mean"};
  }
  if (!micro.pos_neg_excess || *micro.pos_neg_excess != 1.0) {
    return {false, "micro pos_neg_excess"};
  }
  fs::remove_all(dir);
  return {true, "six statistics present; micro corpus exact"};
}

// -------------------------------------------------------------- criterion 8

Outcome mds_round_trip() {
  const std::vector<std::array<double, 2>> pts = {
      {0.0, 0.0}, {2.0, 0.0}, {1.0, 2.0}, {-1.0, 1.0}};
  DistanceMatrix dm;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    dm.terms.push_back("p" + std::to_string(i));
  }
  dm.d.assign(16, 0.0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double dx = pts[i][0] - pts[j][0];
      const double dy = pts[i][1] - pts[j][1];
      dm.d[i * 4 + j] = std::sqrt(dx * dx + dy * dy);
    }
  }
  const Embedding2D e = embed_mds(dm);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double dx = e.coords[i][0] - e.coords[j][0];
      const double dy = e.coords[i][1] - e.coords[j][1];
      if (std::abs(std::sqrt(dx * dx + dy * dy) - dm.at(i, j)) > 1e-6) {
        return {false, "4-point round trip"};
      }
    }
  }
  DistanceMatrix tri;
  tri.terms = {"a", "b", "c"};
  tri.d = {0, 1, 1, 1, 0, 1, 1, 1, 0};
  const Embedding2D t = embed_mds(tri);
  std::vector<double> dist;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const double dx = t.coords[i][0] - t.coords[j][0];
      const double dy = t.coords[i][1] - t.coords[j][1];
      dist.push_back(std::sqrt(dx * dx + dy * dy));
    }
  }
  for (const double d : dist) {
    if (std::abs(d - dist[0]) > 1e-6) return {false, "triangle symmetry"};
  }
  return {true, "4 planar points and equilateral triangle within 1e-6"};
}

// -------------------------------------------------------------- criterion 9

Outcome determinism_end_to_end() {
  const fs::path dir = scratch_dir("determinism");
  const fs::path config_file = dir / "analyze.json";
  {
    std::ofstream config(config_file);
    config << "{\n"
           << "  \"corpus_path\": \"" << (kDataDir / "demo_corpus").string()
           << "\",\n  \"language\": \"italian\",\n"
           << "  \"stopwords_path\": \""
           << (kDataDir / "stopwords_it.txt").string() << "\",\n"
           << "  \"clusters_path\": \""
           << (kDataDir / "demo_clusters.json").string() << "\",\n"
           << "  \"use_clusters\": true,\n"
           << "  \"output_dir\": \"" << (dir / "out").string() << "\"\n}\n";
  }
  const RunConfig cfg = validate_config(config_file);
  const std::vector<std::string> outputs = {
      "network.graphml", "network.dot",       "sbs.csv",       "sbs.json",
      "associations.json", "distances.csv",   "embedding.csv",
      "run_manifest.json"};
  cmd_analyze(cfg);
  std::map<std::string, std::string> first;
  for (const auto& name : outputs) {
    first[name] = util::read_file(cfg.output_dir / name);
  }
  cmd_analyze(cfg);
  for (const auto& name : outputs) {
    std::string a = first[name];
    std::string b = util::read_file(cfg.output_dir / name);
    if (name == "run_manifest.json") {
      auto ja = nlohmann::json::parse(a);
      auto jb = nlohmann::json::parse(b);
      ja.erase("generated_at");
      jb.erase("generated_at");
      if (ja != jb) return {false, "manifest differs beyond the timestamp"};
    } else if (a != b) {
      return {false, name + " differs between runs"};
    }
  }
  fs::remove_all(dir);
  return {true, "two runs byte-identical (timestamp aside)"};
}

// ------------------------------------------------------------- criterion 10

// Zipf-distributed pseudo-Italian corpus comparable to a thousand
// interview transcripts of ~750 tokens each.
void write_synthetic_corpus(const fs::path& jsonl, std::size_t docs,
                            std::size_t mean_tokens) {
  std::mt19937 rng(777777);
  const std::vector<std::string> syllables = {
      "ba", "be", "bi", "bo", "bu", "ca", "che", "chi", "co",  "cu",  "da",
      "de", "di", "do", "du", "fa", "fe",  "fi",  "fo", "fu",  "ga",  "ghe",
      "gi", "go", "gu", "la", "le", "li",  "lo",  "lu", "ma",  "me",  "mi",
      "mo", "mu", "na", "ne", "ni", "no",  "nu",  "pa", "pe",  "pi",  "po",
      "pu", "ra", "re", "ri", "ro", "ru",  "sa",  "se", "si",  "so",  "su",
      "ta", "te", "ti", "to", "tu", "va",  "ve",  "vi", "vo",  "vu",  "za",
      "zo", "gna", "gno", "sci", "sce", "stra", "stro"};
  const std::vector<std::string> endings = {"o",   "a",   "i",   "e",
                                            "one", "ona", "ino", "ina",
                                            "etto", "etta", "are", "ere"};
  constexpr std::size_t kVocab = 3500;
  std::vector<std::string> vocab;
  std::set<std::string> seen;
  std::uniform_int_distribution<std::size_t> syl(0, syllables.size() - 1);
  std::uniform_int_distribution<std::size_t> end(0, endings.size() - 1);
  std::uniform_int_distribution<int> extra(0, 2);
  while (vocab.size() < kVocab) {
    std::string w = syllables[syl(rng)] + syllables[syl(rng)];
    const int more = extra(rng);
    for (int i = 0; i < more; ++i) w += syllables[syl(rng)];
    w += endings[end(rng)];
    if (seen.insert(w).second) vocab.push_back(w);
  }
  // Zipf weights over ranks.
  std::vector<double> weights(kVocab);
  for (std::size_t k = 0; k < kVocab; ++k) {
    weights[k] = 1.0 / std::pow(static_cast<double>(k + 2), 1.05);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(),
                                               weights.end());
  std::normal_distribution<double> length(static_cast<double>(mean_tokens),
                                          190.0);
  std::ofstream out(jsonl, std::ios::binary);
  for (std::size_t d = 0; d < docs; ++d) {
    const std::size_t tokens = static_cast<std::size_t>(
        std::clamp(length(rng), 200.0, 1400.0));
    std::string text;
    text.reserve(tokens * 8);
    for (std::size_t t = 0; t < tokens; ++t) {
      if (t > 0) text += ' ';
      text += vocab[pick(rng)];
    }
    out << "{\"id\": \"doc" << std::setw(4) << std::setfill('0') << d
        << "\", \"text\": \"" << text << "\"}\n";
  }
}

Outcome desk_scale_performance() {
  const fs::path dir = scratch_dir("perf");
  write_synthetic_corpus(dir / "corpus.jsonl", 1000, 764);
  {
    std::ofstream stopwords(dir / "stopwords.txt");
    stopwords << "il\nla\ndi\ne\nun\n";
  }
  // Frequent mid-rank words are guaranteed to survive into the network.
  std::vector<std::string> focal;
  {
    std::ifstream in(dir / "corpus.jsonl");
    std::string line;
    std::getline(in, line);
    const auto doc = nlohmann::json::parse(line);
    std::map<std::string, int> counts;
    for (const auto& token :
         tokenize(doc["text"].get<std::string>(), false)) {
      ++counts[token];
    }
    std::vector<std::pair<int, std::string>> ranked;
    for (const auto& [word, count] : counts) ranked.push_back({count, word});
    std::sort(ranked.rbegin(), ranked.rend());
    for (std::size_t i = 5; i < ranked.size() && focal.size() < 8; ++i) {
      focal.push_back(ranked[i].second);
    }
  }
  {
    std::ofstream config(dir / "analyze.json");
    config << "{\n  \"corpus_path\": \"" << (dir / "corpus.jsonl").string()
           << "\",\n  \"language\": \"italian\",\n"
           << "  \"stopwords_path\": \"" << (dir / "stopwords.txt").string()
           << "\",\n  \"focal_terms\": [";
    for (std::size_t i = 0; i < focal.size(); ++i) {
      config << (i ? ", " : "") << '"' << focal[i] << '"';
    }
    config << "],\n  \"output_dir\": \"" << (dir / "out").string()
           << "\"\n}\n";
  }
  const auto start = std::chrono::steady_clock::now();
  cmd_analyze(validate_config(dir / "analyze.json"));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool wrote = fs::exists(dir / "out" / "run_manifest.json");
  fs::remove_all(dir);
  if (!wrote) return {false, "outputs missing"};
  std::ostringstream detail;
  detail.precision(1);
  detail << std::fixed << "1000 docs x ~764 tokens in " << seconds << "s";
  if (seconds >= 120.0) return {false, detail.str() + " (limit 120s)"};
  return {true, detail.str()};
}

}  // namespace

int main() {
  std::printf("sbs acceptance suite\n");
  run("co-occurrence-oracle-equivalence", cooccurrence_oracle);
  run("betweenness-oracle-equivalence", betweenness_oracle);
  run("analytic-centrality-fixtures", analytic_fixtures);
  run("standardization", standardization);
  run("sbs-affine-invariance", affine_invariance);
  run("stemmer-conformance", stemmer_conformance);
  run("table1-format-fidelity", table1_format);
  run("mds-round-trip", mds_round_trip);
  run("end-to-end-determinism", determinism_end_to_end);
  run("desk-scale-performance", desk_scale_performance);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
