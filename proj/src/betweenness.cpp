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

#include "betweenness.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>

namespace sbs {

namespace {

// Distances that differ by no more than this count as equal-length paths.
constexpr double kTieTolerance = 1e-12;

struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> nbr;
  std::vector<double> dist;  // 1/weight

  explicit Csr(const CooccurrenceNetwork& net) {
    const std::size_t n = net.node_count();
    offsets.assign(n + 1, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
      offsets[v + 1] = offsets[v] + net.degree(v);
    }
    nbr.resize(offsets.back());
    dist.resize(offsets.back());
    std::size_t k = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      for (const auto& nb : net.neighbors(v)) {
        nbr[k] = nb.id;
        dist[k] = 1.0 / static_cast<double>(nb.weight);
        ++k;
      }
    }
  }
};

// Scratch space reused across sources by one worker.
struct Workspace {
  std::vector<double> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<std::vector<std::uint32_t>> preds;
  std::vector<std::uint32_t> order;  // settle order
  std::vector<std::uint32_t> touched;

  explicit Workspace(std::size_t n)
      : dist(n, std::numeric_limits<double>::infinity()),
        sigma(n, 0.0),
        delta(n, 0.0),
        preds(n) {
    order.reserve(n);
    touched.reserve(n);
  }

  void reset() {
    for (const std::uint32_t v : touched) {
      dist[v] = std::numeric_limits<double>::infinity();
      sigma[v] = 0.0;
      delta[v] = 0.0;
      preds[v].clear();
    }
    touched.clear();
    order.clear();
  }
};

// One Dijkstra + dependency accumulation from `source`, added into `acc`.
void accumulate_source(const Csr& g, std::uint32_t source,
                       Workspace& ws, std::vector<double>& acc) {
  using HeapItem = std::pair<double, std::uint32_t>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  ws.reset();
  ws.dist[source] = 0.0;
  ws.sigma[source] = 1.0;
  ws.touched.push_back(source);
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > ws.dist[v]) continue;  // stale entry
    ws.order.push_back(v);
    ws.dist[v] = d;  // pin the settled distance
    for (std::size_t k = g.offsets[v]; k < g.offsets[v + 1]; ++k) {
      const std::uint32_t w = g.nbr[k];
      const double nd = d + g.dist[k];
      if (nd < ws.dist[w] - kTieTolerance) {
        if (ws.dist[w] == std::numeric_limits<double>::infinity()) {
          ws.touched.push_back(w);
        }
        ws.dist[w] = nd;
        ws.sigma[w] = ws.sigma[v];
        ws.preds[w].clear();
        ws.preds[w].push_back(v);
        heap.push({nd, w});
      } else if (nd <= ws.dist[w] + kTieTolerance) {
        ws.sigma[w] += ws.sigma[v];
        ws.preds[w].push_back(v);
      }
    }
  }
  for (std::size_t i = ws.order.size(); i-- > 1;) {
    const std::uint32_t w = ws.order[i];
    const double coeff = (1.0 + ws.delta[w]) / ws.sigma[w];
    for (const std::uint32_t v : ws.preds[w]) {
      ws.delta[v] += ws.sigma[v] * coeff;
    }
    acc[w] += ws.delta[w];
  }
}

}  // namespace

Components connected_components(const CooccurrenceNetwork& net) {
  const std::size_t n = net.node_count();
  Components out;
  out.component_of.assign(n, UINT32_MAX);
  std::vector<std::uint32_t> stack;
  std::vector<std::size_t> sizes;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (out.component_of[start] != UINT32_MAX) continue;
    const std::uint32_t comp = out.count++;
    sizes.push_back(0);
    stack.push_back(start);
    out.component_of[start] = comp;
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      ++sizes[comp];
      for (const auto& nb : net.neighbors(v)) {
        if (out.component_of[nb.id] == UINT32_MAX) {
          out.component_of[nb.id] = comp;
          stack.push_back(nb.id);
        }
      }
    }
  }
  for (std::uint32_t c = 0; c < out.count; ++c) {
    if (sizes[c] > sizes[out.largest]) out.largest = c;
  }
  return out;
}

std::vector<double> betweenness_all(const CooccurrenceNetwork& net,
                                    const BetweennessOptions& options) {
  const std::size_t n = net.node_count();
  std::vector<double> bc(n, 0.0);
  if (n < 3) return bc;
  const Csr g(net);

  std::vector<std::uint32_t> sources;
  sources.reserve(n);
  if (options.largest_component_only) {
    const Components comps = connected_components(net);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (comps.component_of[v] == comps.largest && net.degree(v) > 0) {
        sources.push_back(v);
      }
    }
  } else {
    for (std::uint32_t v = 0; v < n; ++v) {
      if (net.degree(v) > 0) sources.push_back(v);  // isolates contribute 0
    }
  }

  // Sources are processed in fixed blocks; block partials are summed in
  // block order so the result does not depend on thread scheduling.
  constexpr std::size_t kBlock = 64;
  const std::size_t n_blocks = (sources.size() + kBlock - 1) / kBlock;
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(n_blocks, 1)));

  if (threads <= 1) {
    Workspace ws(n);
    for (const std::uint32_t s : sources) accumulate_source(g, s, ws, bc);
  } else {
    std::vector<std::vector<double>> partials(n_blocks);
    std::atomic<std::size_t> next_block{0};
    auto worker = [&] {
      Workspace ws(n);
      while (true) {
        const std::size_t b = next_block.fetch_add(1);
        if (b >= n_blocks) break;
        std::vector<double> acc(n, 0.0);
        const std::size_t begin = b * kBlock;
        const std::size_t end = std::min(sources.size(), begin + kBlock);
        for (std::size_t i = begin; i < end; ++i) {
          accumulate_source(g, sources[i], ws, acc);
        }
        partials[b] = std::move(acc);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (std::size_t b = 0; b < n_blocks; ++b) {
      for (std::size_t v = 0; v < n; ++v) bc[v] += partials[b][v];
    }
  }
  // Undirected graphs: every unordered pair was counted from both ends.
  for (double& x : bc) x *= 0.5;
  return bc;
}

}  // namespace sbs
