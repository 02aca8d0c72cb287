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

#ifndef SBS_NETWORK_HPP_
#define SBS_NETWORK_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textprep.hpp"

namespace sbs {

struct NetworkParams {
  int window = 5;      // two stems co-occur when their gap is < window
  int min_weight = 2;  // arcs below this weight are dropped
};

/// Expert-defined set of surface words treated as one concept node.
/// Members are stored stemmed.
struct ConceptCluster {
  std::string label;
  std::vector<std::string> member_stems;  // sorted, unique
};

/// Undirected weighted word co-occurrence graph. Nodes are kept sorted by
/// term so ids, exports and derived metrics are stable across runs.
/// Immutable once built.
class CooccurrenceNetwork {
 public:
  struct Edge {
    std::uint32_t u;  // u < v
    std::uint32_t v;
    std::uint64_t weight;
  };

  struct Neighbor {
    std::uint32_t id;
    std::uint64_t weight;
  };

  // `terms` must be sorted and unique; edge endpoints index into it.
  CooccurrenceNetwork(NetworkParams params, std::vector<std::string> terms,
                      std::vector<std::uint64_t> term_freq,
                      std::vector<Edge> edges);

  const NetworkParams& params() const { return params_; }
  std::size_t node_count() const { return terms_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& term(std::uint32_t id) const { return terms_[id]; }
  const std::vector<std::string>& terms() const { return terms_; }
  std::uint64_t frequency(std::uint32_t id) const { return term_freq_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::uint32_t> find(std::string_view term) const;
  // Throws Error(lookup) naming the term.
  std::uint32_t require(std::string_view term) const;

  std::span<const Neighbor> neighbors(std::uint32_t id) const;
  std::size_t degree(std::uint32_t id) const;

 private:
  NetworkParams params_;
  std::vector<std::string> terms_;
  std::vector<std::uint64_t> term_freq_;
  std::vector<Edge> edges_;
  // CSR adjacency over both edge directions, neighbor ids ascending.
  std::vector<std::size_t> adj_offsets_;
  std::vector<Neighbor> adj_;
};

// Counts co-occurrences per document with a sliding window (windows never
// cross document boundaries), then drops arcs below params.min_weight.
// Every distinct stem becomes a node even if all of its arcs get filtered.
CooccurrenceNetwork build_network(std::span<const ProcessedDocument> docs,
                                  NetworkParams params);

// Replaces each cluster's member nodes by a single node named by the label.
// Parallel arcs merge additively, intra-cluster arcs disappear, and the
// min-weight filter is not applied again.
CooccurrenceNetwork merge_clusters(const CooccurrenceNetwork& net,
                                   std::span<const ConceptCluster> clusters);

// Clusters file: JSON object mapping label -> array of surface words, which
// are stemmed with the active configuration on load.
std::vector<ConceptCluster> load_clusters(const std::filesystem::path& path,
                                          const PrepConfig& config);

std::string to_graphml(const CooccurrenceNetwork& net);
std::string to_dot(const CooccurrenceNetwork& net);

}  // namespace sbs

#endif  // SBS_NETWORK_HPP_
