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

#include "metrics.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "util.hpp"

namespace sbs {

DiversityMode diversity_mode_from_name(std::string_view name) {
  if (name == "degree") return DiversityMode::degree;
  if (name == "distinctiveness") return DiversityMode::distinctiveness;
  throw Error(ErrorKind::config,
              "metrics: unknown diversity mode '" + std::string(name) +
                  "' (use degree or distinctiveness)");
}

std::string_view diversity_mode_name(DiversityMode mode) {
  return mode == DiversityMode::degree ? "degree" : "distinctiveness";
}

namespace {

double diversity_of_node(const CooccurrenceNetwork& net, std::uint32_t id,
                         DiversityMode mode) {
  if (mode == DiversityMode::degree) {
    return static_cast<double>(net.degree(id));
  }
  const double n = static_cast<double>(net.node_count());
  double sum = 0.0;
  for (const auto& nb : net.neighbors(id)) {
    sum += std::log10((n - 1.0) / static_cast<double>(net.degree(nb.id)));
  }
  return sum;
}

// z-scores with the population sd; all zero when the values are constant.
std::vector<double> standardize(const std::vector<double>& xs) {
  std::vector<double> z(xs.size(), 0.0);
  if (xs.empty()) return z;
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  if (*lo == *hi) return z;
  double sum = 0.0;
  for (const double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (const double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size()));
  if (sd == 0.0) return z;
  for (std::size_t i = 0; i < xs.size(); ++i) z[i] = (xs[i] - mean) / sd;
  return z;
}

}  // namespace

std::uint64_t prevalence(const CooccurrenceNetwork& net,
                         std::string_view term) {
  return net.frequency(net.require(term));
}

double diversity(const CooccurrenceNetwork& net, std::string_view term,
                 DiversityMode mode) {
  const std::uint32_t id = net.require(term);
  if (mode == DiversityMode::distinctiveness && net.node_count() < 2) {
    throw Error(ErrorKind::validation,
                "metrics: distinctiveness diversity needs at least 2 nodes");
  }
  return diversity_of_node(net, id, mode);
}

std::map<std::string, double> connectivity(
    const CooccurrenceNetwork& net, const std::set<std::string>& terms,
    const BetweennessOptions& options) {
  std::map<std::string, double> out;
  const std::vector<double> bc = betweenness_all(net, options);
  for (const std::string& term : terms) {
    out[term] = bc[net.require(term)];
  }
  return out;
}

std::vector<SbsReport> sbs_scores(const CooccurrenceNetwork& net,
                                  const std::set<std::string>& focal_terms,
                                  DiversityMode mode,
                                  const BetweennessOptions& options) {
  const std::size_t n = net.node_count();
  if (n < 2) {
    throw Error(ErrorKind::validation,
                "metrics: SBS needs a network with at least 2 nodes");
  }
  std::vector<std::uint32_t> focal_ids;
  focal_ids.reserve(focal_terms.size());
  for (const std::string& term : focal_terms) {
    focal_ids.push_back(net.require(term));
  }
  std::vector<double> prev(n), div(n);
  for (std::uint32_t id = 0; id < n; ++id) {
    prev[id] = static_cast<double>(net.frequency(id));
    div[id] = diversity_of_node(net, id, mode);
  }
  const std::vector<double> conn = betweenness_all(net, options);
  const std::vector<double> z_prev = standardize(prev);
  const std::vector<double> z_div = standardize(div);
  const std::vector<double> z_conn = standardize(conn);
  std::vector<SbsReport> reports;
  reports.reserve(focal_ids.size());
  for (const std::uint32_t id : focal_ids) {
    SbsReport r;
    r.term = net.term(id);
    r.prevalence = net.frequency(id);
    r.diversity = div[id];
    r.connectivity = conn[id];
    r.z_prevalence = z_prev[id];
    r.z_diversity = z_div[id];
    r.z_connectivity = z_conn[id];
    r.sbs = r.z_prevalence + r.z_diversity + r.z_connectivity;
    reports.push_back(std::move(r));
  }
  std::sort(reports.begin(), reports.end(),
            [](const SbsReport& a, const SbsReport& b) {
              if (a.sbs != b.sbs) return a.sbs > b.sbs;
              return a.term < b.term;
            });
  return reports;
}

std::string component_table_csv(const std::vector<SbsReport>& reports) {
  std::string out =
      "term,prevalence,diversity,connectivity,z_prevalence,z_diversity,"
      "z_connectivity,sbs\n";
  for (const SbsReport& r : reports) {
    out += util::csv_field(r.term);
    out += ',' + std::to_string(r.prevalence);
    out += ',' + util::format_fixed6(r.diversity);
    out += ',' + util::format_fixed6(r.connectivity);
    out += ',' + util::format_fixed6(r.z_prevalence);
    out += ',' + util::format_fixed6(r.z_diversity);
    out += ',' + util::format_fixed6(r.z_connectivity);
    out += ',' + util::format_fixed6(r.sbs);
    out += '\n';
  }
  return out;
}

std::string component_table_csv(const CooccurrenceNetwork& net,
                                const std::set<std::string>& focal_terms,
                                DiversityMode mode,
                                const BetweennessOptions& options) {
  return component_table_csv(sbs_scores(net, focal_terms, mode, options));
}

}  // namespace sbs
