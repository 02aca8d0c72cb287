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

#include "network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "error.hpp"
#include "util.hpp"

namespace sbs {

namespace {

void validate_params(const NetworkParams& params) {
  if (params.window < 2) {
    throw Error(ErrorKind::validation,
                "network: window must be >= 2, got " +
                    std::to_string(params.window));
  }
  if (params.min_weight < 1) {
    throw Error(ErrorKind::validation,
                "network: min_weight must be >= 1, got " +
                    std::to_string(params.min_weight));
  }
}

}  // namespace

CooccurrenceNetwork::CooccurrenceNetwork(NetworkParams params,
                                         std::vector<std::string> terms,
                                         std::vector<std::uint64_t> term_freq,
                                         std::vector<Edge> edges)
    : params_(params),
      terms_(std::move(terms)),
      term_freq_(std::move(term_freq)),
      edges_(std::move(edges)) {
  validate_params(params_);
  if (terms_.size() != term_freq_.size()) {
    throw Error(ErrorKind::internal,
                "network: term/frequency size mismatch");
  }
  if (!std::is_sorted(terms_.begin(), terms_.end()) ||
      std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end()) {
    throw Error(ErrorKind::internal, "network: terms must be sorted unique");
  }
  for (const Edge& e : edges_) {
    if (e.u >= e.v || e.v >= terms_.size()) {
      throw Error(ErrorKind::internal, "network: malformed edge");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  // CSR over both directions.
  std::vector<std::size_t> deg(terms_.size(), 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  adj_offsets_.assign(terms_.size() + 1, 0);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    adj_offsets_[i + 1] = adj_offsets_[i] + deg[i];
  }
  adj_.resize(adj_offsets_.back());
  std::vector<std::size_t> cursor(adj_offsets_.begin(),
                                  adj_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[cursor[e.u]++] = Neighbor{e.v, e.weight};
    adj_[cursor[e.v]++] = Neighbor{e.u, e.weight};
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[i]),
              adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[i + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
}

std::optional<std::uint32_t> CooccurrenceNetwork::find(
    std::string_view term) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<std::uint32_t>(it - terms_.begin());
}

std::uint32_t CooccurrenceNetwork::require(std::string_view term) const {
  if (const auto id = find(term)) return *id;
  throw Error(ErrorKind::lookup,
              "network: term '" + std::string(term) + "' is not a node");
}

std::span<const CooccurrenceNetwork::Neighbor> CooccurrenceNetwork::neighbors(
    std::uint32_t id) const {
  return {adj_.data() + adj_offsets_[id],
          adj_offsets_[id + 1] - adj_offsets_[id]};
}

std::size_t CooccurrenceNetwork::degree(std::uint32_t id) const {
  return adj_offsets_[id + 1] - adj_offsets_[id];
}

CooccurrenceNetwork build_network(std::span<const ProcessedDocument> docs,
                                  NetworkParams params) {
  validate_params(params);
  if (docs.empty()) {
    throw Error(ErrorKind::validation,
                "network: cannot build a network from zero documents");
  }
  // Intern stems in first-seen order; remapped to sorted order afterwards.
  std::unordered_map<std::string_view, std::uint32_t> ids;
  std::vector<std::string_view> seen;
  std::vector<std::uint64_t> freq;
  std::unordered_map<std::uint64_t, std::uint64_t> weights;
  std::vector<std::uint32_t> doc_ids;
  const std::size_t window = static_cast<std::size_t>(params.window);
  for (const ProcessedDocument& doc : docs) {
    doc_ids.clear();
    doc_ids.reserve(doc.stems.size());
    for (const std::string& stem : doc.stems) {
      auto [it, inserted] =
          ids.emplace(stem, static_cast<std::uint32_t>(seen.size()));
      if (inserted) {
        seen.push_back(stem);
        freq.push_back(0);
      }
      ++freq[it->second];
      doc_ids.push_back(it->second);
    }
    const std::size_t n = doc_ids.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t stop = std::min(n, i + window);
      for (std::size_t j = i + 1; j < stop; ++j) {
        const std::uint32_t a = doc_ids[i];
        const std::uint32_t b = doc_ids[j];
        if (a == b) continue;  // no self-loops
        const std::uint64_t key =
            a < b ? (static_cast<std::uint64_t>(a) << 32) | b
                  : (static_cast<std::uint64_t>(b) << 32) | a;
        ++weights[key];
      }
    }
  }
  // Canonical node order: lexicographic by term.
  std::vector<std::uint32_t> order(seen.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return seen[a] < seen[b]; });
  std::vector<std::uint32_t> remap(seen.size());
  std::vector<std::string> terms(seen.size());
  std::vector<std::uint64_t> term_freq(seen.size());
  for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
    remap[order[rank]] = rank;
    terms[rank] = std::string(seen[order[rank]]);
    term_freq[rank] = freq[order[rank]];
  }
  std::vector<CooccurrenceNetwork::Edge> edges;
  edges.reserve(weights.size());
  for (const auto& [key, weight] : weights) {
    if (weight < static_cast<std::uint64_t>(params.min_weight)) continue;
    std::uint32_t u = remap[static_cast<std::uint32_t>(key >> 32)];
    std::uint32_t v = remap[static_cast<std::uint32_t>(key & 0xFFFFFFFFu)];
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, weight});
  }
  return CooccurrenceNetwork(params, std::move(terms), std::move(term_freq),
                             std::move(edges));
}

CooccurrenceNetwork merge_clusters(const CooccurrenceNetwork& net,
                                   std::span<const ConceptCluster> clusters) {
  // Validate labels and member disjointness.
  std::unordered_map<std::string, std::string> stem_to_label;
  std::set<std::string> labels;
  for (const ConceptCluster& cluster : clusters) {
    if (cluster.label.empty()) {
      throw Error(ErrorKind::validation, "network: cluster with empty label");
    }
    if (!labels.insert(cluster.label).second) {
      throw Error(ErrorKind::validation,
                  "network: duplicate cluster label '" + cluster.label + "'");
    }
    if (cluster.member_stems.empty()) {
      throw Error(ErrorKind::validation,
                  "network: cluster '" + cluster.label + "' has no members");
    }
    for (const std::string& stem : cluster.member_stems) {
      if (!stem_to_label.emplace(stem, cluster.label).second) {
        throw Error(ErrorKind::validation,
                    "network: stem '" + stem +
                        "' belongs to more than one cluster");
      }
    }
  }
  for (const ConceptCluster& cluster : clusters) {
    const auto existing = net.find(cluster.label);
    const bool label_is_member =
        std::binary_search(cluster.member_stems.begin(),
                           cluster.member_stems.end(), cluster.label);
    if (existing && !label_is_member) {
      throw Error(ErrorKind::validation,
                  "network: cluster label '" + cluster.label +
                      "' collides with an existing node that is not a member");
    }
  }
  // New node name per old node.
  const std::size_t n = net.node_count();
  std::vector<const std::string*> new_name(n);
  for (std::uint32_t id = 0; id < n; ++id) {
    const auto it = stem_to_label.find(net.term(id));
    new_name[id] = it != stem_to_label.end() ? &it->second : &net.term(id);
  }
  std::map<std::string, std::uint64_t> freq_by_name;
  for (std::uint32_t id = 0; id < n; ++id) {
    freq_by_name[*new_name[id]] += net.frequency(id);
  }
  for (const ConceptCluster& cluster : clusters) {
    freq_by_name.emplace(cluster.label, 0);  // isolate when no member present
  }
  std::vector<std::string> terms;
  std::vector<std::uint64_t> term_freq;
  terms.reserve(freq_by_name.size());
  std::unordered_map<std::string_view, std::uint32_t> term_id;
  for (const auto& [name, freq] : freq_by_name) {
    terms.push_back(name);
    term_freq.push_back(freq);
  }
  for (std::uint32_t i = 0; i < terms.size(); ++i) term_id[terms[i]] = i;
  std::unordered_map<std::uint64_t, std::uint64_t> weights;
  for (const CooccurrenceNetwork::Edge& e : net.edges()) {
    std::uint32_t u = term_id[*new_name[e.u]];
    std::uint32_t v = term_id[*new_name[e.v]];
    if (u == v) continue;  // intra-cluster arc
    if (u > v) std::swap(u, v);
    weights[(static_cast<std::uint64_t>(u) << 32) | v] += e.weight;
  }
  std::vector<CooccurrenceNetwork::Edge> edges;
  edges.reserve(weights.size());
  for (const auto& [key, weight] : weights) {
    edges.push_back({static_cast<std::uint32_t>(key >> 32),
                     static_cast<std::uint32_t>(key & 0xFFFFFFFFu), weight});
  }
  return CooccurrenceNetwork(net.params(), std::move(terms),
                             std::move(term_freq), std::move(edges));
}

std::vector<ConceptCluster> load_clusters(const std::filesystem::path& path,
                                          const PrepConfig& config) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(util::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::validation,
                "network: cannot parse clusters file " + path.string() + ": " +
                    e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::validation,
                "network: clusters file must be a JSON object mapping "
                "label to an array of words");
  }
  std::vector<ConceptCluster> clusters;
  for (const auto& [label, members] : doc.items()) {
    if (!members.is_array()) {
      throw Error(ErrorKind::validation,
                  "network: cluster '" + label + "' must map to an array");
    }
    ConceptCluster cluster;
    cluster.label = label;
    std::set<std::string> stems;
    for (const auto& member : members) {
      if (!member.is_string()) {
        throw Error(ErrorKind::validation,
                    "network: cluster '" + label + "' has a non-string member");
      }
      const std::string surface = member.get<std::string>();
      const std::vector<std::string> tokens =
          tokenize(surface, config.keep_digits);
      if (tokens.size() != 1) {
        throw Error(ErrorKind::validation,
                    "network: cluster member '" + surface + "' in '" + label +
                        "' must be a single word");
      }
      stems.insert(stem_word(tokens[0], config.language));
    }
    cluster.member_stems.assign(stems.begin(), stems.end());
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

std::string to_graphml(const CooccurrenceNetwork& net) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out += "  <key id=\"d0\" for=\"node\" attr.name=\"term\" "
         "attr.type=\"string\"/>\n";
  out += "  <key id=\"d1\" for=\"node\" attr.name=\"frequency\" "
         "attr.type=\"long\"/>\n";
  out += "  <key id=\"d2\" for=\"edge\" attr.name=\"weight\" "
         "attr.type=\"long\"/>\n";
  out += "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (std::uint32_t id = 0; id < net.node_count(); ++id) {
    out += "    <node id=\"n" + std::to_string(id) + "\"><data key=\"d0\">" +
           util::xml_escape(net.term(id)) + "</data><data key=\"d1\">" +
           std::to_string(net.frequency(id)) + "</data></node>\n";
  }
  for (const auto& e : net.edges()) {
    out += "    <edge source=\"n" + std::to_string(e.u) + "\" target=\"n" +
           std::to_string(e.v) + "\"><data key=\"d2\">" +
           std::to_string(e.weight) + "</data></edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string to_dot(const CooccurrenceNetwork& net) {
  std::string out = "graph cooccurrence {\n";
  for (std::uint32_t id = 0; id < net.node_count(); ++id) {
    out += "  \"" + util::dot_escape(net.term(id)) + "\" [frequency=" +
           std::to_string(net.frequency(id)) + "];\n";
  }
  for (const auto& e : net.edges()) {
    out += "  \"" + util::dot_escape(net.term(e.u)) + "\" -- \"" +
           util::dot_escape(net.term(e.v)) + "\" [weight=" +
           std::to_string(e.weight) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sbs
