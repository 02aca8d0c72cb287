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

#ifndef SBS_METRICS_HPP_
#define SBS_METRICS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "betweenness.hpp"
#include "network.hpp"

namespace sbs {

enum class DiversityMode { degree, distinctiveness };

DiversityMode diversity_mode_from_name(std::string_view name);
std::string_view diversity_mode_name(DiversityMode mode);

/// Semantic importance of one term: the three raw components, their
/// z-scores over all network nodes, and their sum.
struct SbsReport {
  std::string term;
  std::uint64_t prevalence = 0;
  double diversity = 0.0;
  double connectivity = 0.0;
  double z_prevalence = 0.0;
  double z_diversity = 0.0;
  double z_connectivity = 0.0;
  double sbs = 0.0;
};

// Occurrence count of the term in the preprocessed corpus.
std::uint64_t prevalence(const CooccurrenceNetwork& net,
                         std::string_view term);

// degree: number of distinct neighbors. distinctiveness: sum over neighbors
// u of log10((n-1)/deg(u)), which rewards associations with words that are
// not themselves connected to everything.
double diversity(const CooccurrenceNetwork& net, std::string_view term,
                 DiversityMode mode);

// Weighted betweenness centrality of the requested terms.
std::map<std::string, double> connectivity(
    const CooccurrenceNetwork& net, const std::set<std::string>& terms,
    const BetweennessOptions& options = {});

// Computes all three components for every node, z-standardizes each across
// all nodes (population sd; a constant component gives all-zero z) and
// returns reports for the focal terms, best SBS first (ties by term).
std::vector<SbsReport> sbs_scores(const CooccurrenceNetwork& net,
                                  const std::set<std::string>& focal_terms,
                                  DiversityMode mode,
                                  const BetweennessOptions& options = {});

// CSV projection of sbs_scores (header always present, 6-decimal reals).
std::string component_table_csv(const CooccurrenceNetwork& net,
                                const std::set<std::string>& focal_terms,
                                DiversityMode mode,
                                const BetweennessOptions& options = {});
std::string component_table_csv(const std::vector<SbsReport>& reports);

}  // namespace sbs

#endif  // SBS_METRICS_HPP_
