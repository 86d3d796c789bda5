/** Copyright 2026 The tvgop Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tvgop/journey.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "tvgop/error.hpp"

namespace tvgop {

bool is_journey(const TimeVaryingGraph& graph, NodeId source,
                std::span<const Hop> hops) {
  graph.require_node(source);
  for (const Hop& h : hops) graph.edge_or_throw(h.from, h.to);

  NodeId at = source;
  Time ready = 0;
  bool first = true;
  for (const Hop& h : hops) {
    if (h.from != at) return false;
    const TemporalEdge& e = *graph.edge(h.from, h.to);
    if (!e.presence.contains(h.departure)) return false;
    if (!first && h.departure < ready) return false;
    ready = h.departure + latency(e, h.departure);
    at = h.to;
    first = false;
  }
  return true;
}

std::optional<Crossing> earliest_crossing(const TemporalEdge& edge,
                                          Time ready) {
  std::optional<Crossing> best;
  const auto& pieces = edge.presence.intervals();
  auto it = std::lower_bound(
      pieces.begin(), pieces.end(), ready,
      [](const TimeInterval& iv, Time t) { return iv.end() <= t; });
  for (; it != pieces.end(); ++it) {
    Time first = std::max(ready, it->start());
    if (best && first >= best->arrival) break;
    // Latency is constant between consecutive piece boundaries, so the
    // earliest instant of each constant stretch is the only candidate there.
    std::vector<Time> candidates{first};
    for (const auto& lp : edge.latency) {
      for (Time b : {lp.when.start(), lp.when.end()}) {
        if (b > first && b < it->end()) candidates.push_back(b);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (Time d : candidates) {
      if (best && d >= best->arrival) break;
      Time arrival = d + latency(edge, d);
      if (!best || arrival < best->arrival) best = Crossing{d, arrival};
    }
  }
  return best;
}

std::vector<Time> earliest_arrivals(const TimeVaryingGraph& graph, NodeId u,
                                    Time start) {
  graph.require_node(u);
  std::vector<Time> best(graph.node_count(), kInfinity);
  std::vector<bool> settled(graph.node_count(), false);
  using Entry = std::pair<Time, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  best[u.index] = start;
  queue.emplace(start, u.index);
  while (!queue.empty()) {
    auto [t, idx] = queue.top();
    queue.pop();
    if (settled[idx]) continue;
    settled[idx] = true;
    NodeId at{idx};
    for (NodeId w : graph.out_neighbours(at)) {
      if (settled[w.index]) continue;
      auto c = earliest_crossing(*graph.edge(at, w), t);
      if (c && c->arrival < best[w.index]) {
        best[w.index] = c->arrival;
        queue.emplace(c->arrival, w.index);
      }
    }
  }
  return best;
}

namespace {

// Earliest arrival at every node using at most `max_hops` crossings.
std::vector<Time> bounded_arrivals(const TimeVaryingGraph& graph, NodeId from,
                                   Time ready, std::size_t max_hops) {
  std::vector<Time> current(graph.node_count(), kInfinity);
  current[from.index] = ready;
  for (std::size_t k = 0; k < max_hops; ++k) {
    std::vector<Time> next = current;
    bool changed = false;
    auto relax = [&](NodeId a, NodeId b, const TemporalEdge& e) {
      if (current[a.index] == kInfinity) return;
      auto c = earliest_crossing(e, current[a.index]);
      if (c && c->arrival < next[b.index]) {
        next[b.index] = c->arrival;
        changed = true;
      }
    };
    for (const auto& [key, e] : graph.edges()) {
      relax(key.u, key.v, e);
      if (!graph.directed()) relax(key.v, key.u, e);
    }
    current = std::move(next);
    if (!changed) break;
  }
  return current;
}

}  // namespace

std::optional<Journey> foremost_journey(const TimeVaryingGraph& graph,
                                        NodeId u, NodeId v, Time start) {
  graph.require_node(u);
  graph.require_node(v);
  if (u == v) return Journey{u, {}, start};

  const Time target = earliest_arrivals(graph, u, start)[v.index];
  if (target == kInfinity) return std::nullopt;

  // A hop-minimal foremost journey never revisits a node, so it has fewer
  // than |V| hops.
  std::size_t hops = 1;
  while (bounded_arrivals(graph, u, start, hops)[v.index] > target) ++hops;

  Journey out{u, {}, start};
  NodeId at = u;
  Time ready = start;
  for (std::size_t left = hops; left > 0; --left) {
    bool advanced = false;
    for (NodeId w : graph.out_neighbours(at)) {
      auto c = earliest_crossing(*graph.edge(at, w), ready);
      if (!c) continue;
      if (bounded_arrivals(graph, w, c->arrival, left - 1)[v.index] > target) {
        continue;
      }
      out.hops.push_back(Hop{at, w, c->departure});
      at = w;
      ready = c->arrival;
      advanced = true;
      break;
    }
    if (!advanced) return std::nullopt;  // unreachable: target is attainable
  }
  out.arrival = ready;
  return out;
}

std::set<NodeId> reachability_set(const TimeVaryingGraph& graph, NodeId u,
                                  Time start) {
  auto best = earliest_arrivals(graph, u, start);
  std::set<NodeId> out;
  for (std::uint32_t i = 0; i < best.size(); ++i) {
    if (best[i] != kInfinity) out.insert(NodeId{i});
  }
  return out;
}

std::vector<std::vector<bool>> mutual_reachability_matrix(
    const TimeVaryingGraph& graph, const TimeInterval& window) {
  const std::size_t n = graph.node_count();
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) {
    auto best = earliest_arrivals(graph, NodeId{i}, window.start());
    for (std::uint32_t j = 0; j < n; ++j) {
      out[i][j] = i == j || best[j] < window.end();
    }
  }
  return out;
}

bool is_temporally_connected(const TimeVaryingGraph& graph,
                             std::span<const NodeId> subset,
                             const TimeInterval& window) {
  for (NodeId id : subset) graph.require_node(id);
  for (NodeId a : subset) {
    auto best = earliest_arrivals(graph, a, window.start());
    for (NodeId b : subset) {
      if (a != b && !(best[b.index] < window.end())) return false;
    }
  }
  return true;
}

}  // namespace tvgop
