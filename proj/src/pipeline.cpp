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

#include "pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iostream>
#include <map>
#include <set>

#include <json.hpp>

#include "corpus.hpp"
#include "error.hpp"
#include "semantics.hpp"
#include "unicode.hpp"
#include "util.hpp"
#include "version.hpp"

namespace sbs {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

// Betweenness on networks beyond this size runs only from the largest
// connected component.
constexpr std::size_t kExactBetweennessNodeLimit = 20000;

const std::vector<std::string>& known_config_fields() {
  static const std::vector<std::string> fields = {
      "corpus_path",        "language",
      "stopwords_path",     "positive_lexicon_path",
      "negative_lexicon_path", "clusters_path",
      "window",             "min_weight",
      "diversity_mode",     "keep_digits",
      "focal_terms",        "use_clusters",
      "top_n",              "output_dir",
  };
  return fields;
}

[[noreturn]] void config_error(const std::string& message) {
  throw Error(ErrorKind::config, "config: " + message);
}

void reject_unknown_fields(const ordered_json& doc) {
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    const auto& known = known_config_fields();
    if (std::find(known.begin(), known.end(), key) != known.end()) continue;
    std::string best;
    std::size_t best_distance = 3;  // suggest only close misses
    for (const std::string& candidate : known) {
      const std::size_t d = util::levenshtein(key, candidate);
      if (d < best_distance) {
        best_distance = d;
        best = candidate;
      }
    }
    std::string message = "unknown field \"" + key + "\"";
    if (!best.empty()) message += ", did you mean \"" + best + "\"?";
    config_error(message);
  }
}

std::string require_string(const ordered_json& doc, const std::string& key) {
  if (!doc.contains(key)) config_error("missing required field \"" + key + "\"");
  if (!doc[key].is_string() || doc[key].get<std::string>().empty()) {
    config_error("field \"" + key + "\" must be a nonempty string");
  }
  return doc[key].get<std::string>();
}

long long get_integer(const ordered_json& doc, const std::string& key,
                      long long fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number_integer()) {
    config_error("field \"" + key + "\" must be an integer");
  }
  return doc[key].get<long long>();
}

fs::path resolve_input(const std::string& raw, const fs::path& base) {
  fs::path p(raw);
  return p.is_absolute() ? p : base / p;
}

void check_exists(const fs::path& path, const std::string& field) {
  if (!fs::exists(path)) {
    config_error("field \"" + field + "\": path does not exist: " +
                 path.string());
  }
}

}  // namespace

RunConfig validate_config(const fs::path& path) {
  if (!fs::exists(path)) {
    throw Error(ErrorKind::io,
                "config: file does not exist: " + path.string());
  }
  ordered_json doc;
  try {
    doc = ordered_json::parse(util::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    config_error("cannot parse " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) config_error("config must be a JSON object");
  reject_unknown_fields(doc);

  RunConfig cfg;
  const fs::path base = path.has_parent_path() ? path.parent_path() : ".";

  cfg.corpus_path_raw = require_string(doc, "corpus_path");
  cfg.corpus_path = resolve_input(cfg.corpus_path_raw, base);
  check_exists(cfg.corpus_path, "corpus_path");

  cfg.language = language_from_name(require_string(doc, "language"));

  cfg.stopwords_path_raw = require_string(doc, "stopwords_path");
  cfg.stopwords_path = resolve_input(cfg.stopwords_path_raw, base);
  check_exists(cfg.stopwords_path, "stopwords_path");

  for (const auto& [key, raw_member, path_member] :
       {std::tuple{"positive_lexicon_path", &RunConfig::positive_lexicon_path_raw,
                   &RunConfig::positive_lexicon_path},
        std::tuple{"negative_lexicon_path", &RunConfig::negative_lexicon_path_raw,
                   &RunConfig::negative_lexicon_path},
        std::tuple{"clusters_path", &RunConfig::clusters_path_raw,
                   &RunConfig::clusters_path}}) {
    if (!doc.contains(key)) continue;
    const std::string raw = require_string(doc, key);
    cfg.*raw_member = raw;
    const fs::path resolved = resolve_input(raw, base);
    check_exists(resolved, key);
    cfg.*path_member = resolved;
  }

  const long long window = get_integer(doc, "window", 5);
  if (window < 2) config_error("field \"window\" must be >= 2");
  cfg.window = static_cast<int>(window);

  const long long min_weight = get_integer(doc, "min_weight", 2);
  if (min_weight < 1) config_error("field \"min_weight\" must be >= 1");
  cfg.min_weight = static_cast<int>(min_weight);

  const long long top_n = get_integer(doc, "top_n", 20);
  if (top_n < 1) config_error("field \"top_n\" must be >= 1");
  cfg.top_n = static_cast<std::uint64_t>(top_n);

  if (doc.contains("diversity_mode")) {
    cfg.diversity_mode =
        diversity_mode_from_name(require_string(doc, "diversity_mode"));
  }
  if (doc.contains("keep_digits")) {
    if (!doc["keep_digits"].is_boolean()) {
      config_error("field \"keep_digits\" must be a boolean");
    }
    cfg.keep_digits = doc["keep_digits"].get<bool>();
  }
  if (doc.contains("use_clusters")) {
    if (!doc["use_clusters"].is_boolean()) {
      config_error("field \"use_clusters\" must be a boolean");
    }
    cfg.use_clusters = doc["use_clusters"].get<bool>();
  }
  if (doc.contains("focal_terms")) {
    if (!doc["focal_terms"].is_array()) {
      config_error("field \"focal_terms\" must be an array of words");
    }
    for (const auto& term : doc["focal_terms"]) {
      if (!term.is_string() || term.get<std::string>().empty()) {
        config_error("field \"focal_terms\" must contain nonempty strings");
      }
      cfg.focal_terms.push_back(term.get<std::string>());
    }
  }
  if (cfg.use_clusters && !cfg.clusters_path) {
    config_error("field \"use_clusters\" requires \"clusters_path\"");
  }
  if (cfg.use_clusters && !cfg.focal_terms.empty()) {
    config_error(
        "fields \"use_clusters\" and \"focal_terms\" are mutually exclusive");
  }

  cfg.output_dir = fs::path(require_string(doc, "output_dir"));
  return cfg;
}

void apply_override(RunConfig& config, std::string_view key, long long value) {
  if (key == "window") {
    if (value < 2) config_error("field \"window\" must be >= 2");
    config.window = static_cast<int>(value);
  } else if (key == "min_weight") {
    if (value < 1) config_error("field \"min_weight\" must be >= 1");
    config.min_weight = static_cast<int>(value);
  } else if (key == "top_n") {
    if (value < 1) config_error("field \"top_n\" must be >= 1");
    config.top_n = static_cast<std::uint64_t>(value);
  } else {
    config_error("unknown override \"" + std::string(key) +
                 "\" (window, min_weight and top_n can be overridden)");
  }
}

namespace {

void ensure_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorKind::io, "io: cannot create output directory " +
                                   dir.string() + ": " + ec.message());
  }
}

ordered_json stats_to_json(const CorpusStats& stats, bool with_emotion) {
  ordered_json j;
  j["n_docs"] = stats.n_docs;
  j["tokens_mean"] = stats.tokens_mean;
  j["tokens_sd"] = stats.tokens_sd;
  j["types_mean"] = stats.types_mean;
  j["types_sd"] = stats.types_sd;
  j["ttr_mean"] = stats.ttr_mean;
  j["ttr_sd"] = stats.ttr_sd;
  j["six_letter_ratio"] = stats.six_letter_ratio;
  if (with_emotion) {
    j["positive_count"] = stats.positive_count;
    j["negative_count"] = stats.negative_count;
    if (stats.pos_neg_excess) {
      j["pos_neg_excess"] = *stats.pos_neg_excess;
    } else {
      j["pos_neg_excess"] = nullptr;
    }
  } else {
    j["positive_count"] = nullptr;
    j["negative_count"] = nullptr;
    j["pos_neg_excess"] = nullptr;
  }
  return j;
}

std::string stats_to_csv(const CorpusStats& stats, bool with_emotion) {
  std::string out = "measure,value\n";
  out += "n_docs," + std::to_string(stats.n_docs) + "\n";
  out += "tokens_mean," + util::format_fixed6(stats.tokens_mean) + "\n";
  out += "tokens_sd," + util::format_fixed6(stats.tokens_sd) + "\n";
  out += "types_mean," + util::format_fixed6(stats.types_mean) + "\n";
  out += "types_sd," + util::format_fixed6(stats.types_sd) + "\n";
  out += "ttr_mean," + util::format_fixed6(stats.ttr_mean) + "\n";
  out += "ttr_sd," + util::format_fixed6(stats.ttr_sd) + "\n";
  out += "six_letter_ratio," + util::format_fixed6(stats.six_letter_ratio) +
         "\n";
  if (with_emotion) {
    out += "positive_count," + std::to_string(stats.positive_count) + "\n";
    out += "negative_count," + std::to_string(stats.negative_count) + "\n";
    out += "pos_neg_excess," +
           (stats.pos_neg_excess ? util::format_fixed6(*stats.pos_neg_excess)
                                 : std::string()) +
           "\n";
  } else {
    out += "positive_count,\nnegative_count,\npos_neg_excess,\n";
  }
  return out;
}

// Stable digest for a corpus path: file digest for JSONL, and a digest of
// per-document digests (sorted by id) for directories.
std::string corpus_digest(const fs::path& path) {
  if (!fs::is_directory(path)) {
    return util::sha256_hex(util::read_file(path));
  }
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") {
      continue;
    }
    entries.emplace_back(entry.path().stem().string(),
                         util::sha256_hex(util::read_file(entry.path())));
  }
  std::sort(entries.begin(), entries.end());
  std::string combined;
  for (const auto& [id, digest] : entries) {
    combined += id + "\t" + digest + "\n";
  }
  return util::sha256_hex(combined);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct FocalResolution {
  std::set<std::string> nodes;                 // node names to score
  std::map<std::string, std::string> stem_of;  // surface -> node name
};

// Focal surface words are stemmed before lookup; a stem that was merged
// into a concept cluster resolves to the cluster label. Unknown nodes
// produce a lookup error with prefix suggestions.
FocalResolution resolve_focal_terms(const RunConfig& cfg,
                                    const CooccurrenceNetwork& net,
                                    std::span<const ConceptCluster> clusters) {
  FocalResolution out;
  if (cfg.use_clusters) {
    for (const ConceptCluster& cluster : clusters) {
      out.nodes.insert(cluster.label);
      out.stem_of[cluster.label] = cluster.label;
    }
  } else {
    std::map<std::string, std::string> label_of_stem;
    for (const ConceptCluster& cluster : clusters) {
      for (const std::string& stem : cluster.member_stems) {
        label_of_stem[stem] = cluster.label;
      }
    }
    for (const std::string& surface : cfg.focal_terms) {
      const std::vector<std::string> tokens =
          tokenize(surface, cfg.keep_digits);
      if (tokens.size() != 1) {
        throw Error(ErrorKind::config,
                    "config: focal term '" + surface +
                        "' must be a single word");
      }
      std::string node = stem_word(tokens[0], cfg.language);
      if (const auto it = label_of_stem.find(node);
          it != label_of_stem.end()) {
        node = it->second;
      }
      out.nodes.insert(node);
      out.stem_of[surface] = node;
    }
  }
  std::vector<std::string> missing;
  for (const std::string& node : out.nodes) {
    if (!net.find(node)) missing.push_back(node);
  }
  if (missing.empty()) return out;
  std::string message = "pipeline: focal terms missing from the network:";
  for (const std::string& stem : missing) {
    message += " '" + stem + "'";
    // Suggest nodes sharing the longest prefix.
    std::size_t best_len = 0;
    std::vector<std::string> suggestions;
    for (const std::string& term : net.terms()) {
      std::size_t common = 0;
      while (common < term.size() && common < stem.size() &&
             term[common] == stem[common]) {
        ++common;
      }
      if (common == 0) continue;
      if (common > best_len) {
        best_len = common;
        suggestions.assign(1, term);
      } else if (common == best_len && suggestions.size() < 3) {
        suggestions.push_back(term);
      }
    }
    if (!suggestions.empty()) {
      message += " (nearest:";
      for (const std::string& s : suggestions) message += " '" + s + "'";
      message += ")";
    }
    message += ";";
  }
  throw Error(ErrorKind::lookup, message);
}

}  // namespace

void cmd_stats(const RunConfig& config) {
  const std::vector<Document> docs = load_corpus(config.corpus_path);
  const bool with_emotion =
      config.positive_lexicon_path.has_value() &&
      config.negative_lexicon_path.has_value();
  if (config.positive_lexicon_path.has_value() !=
      config.negative_lexicon_path.has_value()) {
    config_error(
        "emotion statistics need both positive_lexicon_path and "
        "negative_lexicon_path");
  }
  Lexicon positive{"positive", {}};
  Lexicon negative{"negative", {}};
  if (with_emotion) {
    positive = load_lexicon(*config.positive_lexicon_path, "positive");
    negative = load_lexicon(*config.negative_lexicon_path, "negative");
  }
  const CorpusStats stats = corpus_stats(docs, positive, negative);
  ensure_output_dir(config.output_dir);
  util::atomic_write(config.output_dir / "stats.json",
                     stats_to_json(stats, with_emotion).dump(2) + "\n");
  util::atomic_write(config.output_dir / "stats.csv",
                     stats_to_csv(stats, with_emotion));
}

void cmd_analyze(const RunConfig& config) {
  const std::vector<Document> docs = load_corpus(config.corpus_path);
  PrepConfig prep;
  prep.language = config.language;
  prep.stopwords = load_lexicon(config.stopwords_path, "stopwords");
  prep.keep_digits = config.keep_digits;

  std::vector<ProcessedDocument> processed;
  processed.reserve(docs.size());
  for (const Document& doc : docs) processed.push_back(preprocess(doc, prep));

  const NetworkParams params{config.window, config.min_weight};
  CooccurrenceNetwork net = build_network(processed, params);

  std::vector<ConceptCluster> clusters;
  if (config.clusters_path) {
    clusters = load_clusters(*config.clusters_path, prep);
    net = merge_clusters(net, clusters);
  }

  const FocalResolution focal = resolve_focal_terms(config, net, clusters);
  if (focal.nodes.size() < 3) {
    throw Error(ErrorKind::config,
                "config: analysis needs at least 3 focal terms (distance "
                "maps and the 2-D embedding are not defined below that)");
  }

  BetweennessOptions bt;
  if (net.node_count() > kExactBetweennessNodeLimit) {
    bt.largest_component_only = true;
    std::clog << "sbs: note: network has " << net.node_count()
              << " nodes (> " << kExactBetweennessNodeLimit
              << "); betweenness restricted to the largest connected "
                 "component\n";
  }

  const std::vector<SbsReport> reports =
      sbs_scores(net, focal.nodes, config.diversity_mode, bt);

  // Focal list in lexicographic order for distance/embedding outputs.
  const std::vector<std::string> focal_sorted(focal.nodes.begin(),
                                              focal.nodes.end());
  const DistanceMatrix dm = concept_distances(net, focal_sorted);
  const Embedding2D embedding = embed_mds(dm);

  ensure_output_dir(config.output_dir);

  util::atomic_write(config.output_dir / "network.graphml", to_graphml(net));
  util::atomic_write(config.output_dir / "network.dot", to_dot(net));
  util::atomic_write(config.output_dir / "sbs.csv",
                     component_table_csv(reports));

  ordered_json sbs_json = ordered_json::array();
  for (const SbsReport& r : reports) {
    ordered_json item;
    item["term"] = r.term;
    item["prevalence"] = r.prevalence;
    item["diversity"] = r.diversity;
    item["connectivity"] = r.connectivity;
    item["z_prevalence"] = r.z_prevalence;
    item["z_diversity"] = r.z_diversity;
    item["z_connectivity"] = r.z_connectivity;
    item["sbs"] = r.sbs;
    sbs_json.push_back(std::move(item));
  }
  util::atomic_write(config.output_dir / "sbs.json", sbs_json.dump(2) + "\n");

  ordered_json assoc_json = ordered_json::object();
  for (const std::string& node : focal_sorted) {
    const AssociationList list = associations(net, node, config.top_n);
    ordered_json entries = ordered_json::array();
    for (const auto& [term, weight] : list.entries) {
      entries.push_back(ordered_json::array({term, weight}));
    }
    assoc_json[node] = std::move(entries);
  }
  util::atomic_write(config.output_dir / "associations.json",
                     assoc_json.dump(2) + "\n");

  std::string distances_csv = "term";
  for (const std::string& term : dm.terms) {
    distances_csv += ',' + util::csv_field(term);
  }
  distances_csv += '\n';
  for (std::size_t i = 0; i < dm.terms.size(); ++i) {
    distances_csv += util::csv_field(dm.terms[i]);
    for (std::size_t j = 0; j < dm.terms.size(); ++j) {
      distances_csv += ',' + util::format_fixed6(dm.at(i, j));
    }
    distances_csv += '\n';
  }
  util::atomic_write(config.output_dir / "distances.csv", distances_csv);

  std::string embedding_csv = "term,x,y\n";
  for (std::size_t i = 0; i < embedding.terms.size(); ++i) {
    embedding_csv += util::csv_field(embedding.terms[i]) + ',' +
                     util::format_fixed6(embedding.coords[i][0]) + ',' +
                     util::format_fixed6(embedding.coords[i][1]) + '\n';
  }
  util::atomic_write(config.output_dir / "embedding.csv", embedding_csv);

  ordered_json manifest;
  manifest["tool"] = "sbs";
  manifest["version"] = kVersion;
  manifest["generated_at"] = utc_timestamp();
  ordered_json parameters;
  parameters["language"] = std::string(language_name(config.language));
  parameters["window"] = config.window;
  parameters["min_weight"] = config.min_weight;
  parameters["top_n"] = config.top_n;
  parameters["diversity_mode"] =
      std::string(diversity_mode_name(config.diversity_mode));
  parameters["keep_digits"] = config.keep_digits;
  parameters["use_clusters"] = config.use_clusters;
  ordered_json focal_json = ordered_json::object();
  for (const auto& [surface, node] : focal.stem_of) focal_json[surface] = node;
  parameters["focal_terms"] = std::move(focal_json);
  manifest["parameters"] = std::move(parameters);
  ordered_json inputs;
  inputs["corpus"] = {{"path", config.corpus_path_raw},
                      {"sha256", corpus_digest(config.corpus_path)}};
  inputs["stopwords"] = {
      {"path", config.stopwords_path_raw},
      {"sha256", util::sha256_hex(util::read_file(config.stopwords_path))}};
  if (config.clusters_path) {
    inputs["clusters"] = {
        {"path", config.clusters_path_raw},
        {"sha256", util::sha256_hex(util::read_file(*config.clusters_path))}};
  }
  manifest["inputs"] = std::move(inputs);
  ordered_json network_info;
  network_info["nodes"] = net.node_count();
  network_info["edges"] = net.edge_count();
  network_info["betweenness_largest_component_only"] =
      bt.largest_component_only;
  manifest["network"] = std::move(network_info);
  manifest["outputs"] = {"network.graphml", "network.dot",  "sbs.csv",
                         "sbs.json",        "associations.json",
                         "distances.csv",   "embedding.csv"};
  util::atomic_write(config.output_dir / "run_manifest.json",
                     manifest.dump(2) + "\n");
}

}  // namespace sbs
