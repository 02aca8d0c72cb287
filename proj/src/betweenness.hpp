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

#ifndef SBS_BETWEENNESS_HPP_
#define SBS_BETWEENNESS_HPP_

#include <cstdint>
#include <vector>

#include "network.hpp"

namespace sbs {

struct BetweennessOptions {
  // 0 picks the hardware concurrency. Results are byte-identical for any
  // thread count: per-source contributions are reduced in a fixed order.
  unsigned threads = 0;
  // Run sources only from the largest connected component (nodes elsewhere
  // get a zero score). Used to keep very large networks tractable.
  bool largest_component_only = false;
};

// Weighted betweenness centrality of every node (Brandes' accumulation over
// single-source shortest paths). Edge distance is 1/weight, so frequent
// co-occurrence means proximity. Each unordered pair {s,t} contributes once
// (the path a-b-c yields exactly 1 for b). Unnormalized.
std::vector<double> betweenness_all(const CooccurrenceNetwork& net,
                                    const BetweennessOptions& options = {});

// Connected component id per node plus the id of the largest component.
struct Components {
  std::vector<std::uint32_t> component_of;
  std::uint32_t count = 0;
  std::uint32_t largest = 0;  // component id with the most nodes
};
Components connected_components(const CooccurrenceNetwork& net);

}  // namespace sbs

#endif  // SBS_BETWEENNESS_HPP_
