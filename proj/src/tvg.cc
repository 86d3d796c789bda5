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

#include "tvgop/tvg.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "tvgop/error.hpp"

namespace tvgop {

TimeVaryingGraph::TimeVaryingGraph(TimeInterval lifetime, bool directed)
    : lifetime_(lifetime), directed_(directed) {}

void TimeVaryingGraph::require_mutable() const {
  if (frozen_) fail(ErrorCode::kFrozen, "graph is frozen");
}

void TimeVaryingGraph::require_node(NodeId id) const {
  if (!contains(id)) {
    fail(ErrorCode::kNotFound, fmt::format("unknown node {}", id.index));
  }
}

NodeId TimeVaryingGraph::add_node(std::optional<std::string> label) {
  require_mutable();
  NodeId id{static_cast<std::uint32_t>(labels_.size())};
  if (label) {
    if (by_label_.contains(*label)) {
      fail(ErrorCode::kInvalidArgument,
           fmt::format("duplicate node label '{}'", *label));
    }
    by_label_.emplace(*label, id);
  }
  labels_.push_back(std::move(label));
  out_.emplace_back();
  return id;
}

NodeId TimeVaryingGraph::ensure_node(const std::string& label) {
  if (auto found = find_node(label)) return *found;
  return add_node(label);
}

std::optional<NodeId> TimeVaryingGraph::find_node(
    const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

const std::optional<std::string>& TimeVaryingGraph::node_label(
    NodeId id) const {
  require_node(id);
  return labels_[id.index];
}

std::string TimeVaryingGraph::node_name(NodeId id) const {
  const auto& label = node_label(id);
  return label ? *label : std::to_string(id.index);
}

EdgeKey TimeVaryingGraph::canonical(NodeId u, NodeId v) const {
  if (!directed_ && v < u) std::swap(u, v);
  return EdgeKey{u, v};
}

TemporalEdge& TimeVaryingGraph::edge_slot(NodeId u, NodeId v) {
  require_mutable();
  require_node(u);
  require_node(v);
  if (u == v) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("self-loop on node {} rejected", node_name(u)));
  }
  EdgeKey key = canonical(u, v);
  auto [it, inserted] = edges_.try_emplace(key, TemporalEdge{key, {}, {}, {}});
  if (inserted) {
    auto link = [](std::vector<NodeId>& list, NodeId n) {
      list.insert(std::upper_bound(list.begin(), list.end(), n), n);
    };
    link(out_[key.u.index], key.v);
    if (!directed_) link(out_[key.v.index], key.u);
  }
  return it->second;
}

const TemporalEdge& TimeVaryingGraph::add_contact(
    NodeId u, NodeId v, Time t1, Time t2, std::optional<std::string> label) {
  TimeInterval piece(t1, t2);
  if (!lifetime_.contains(piece)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("contact [{}, {}) lies outside lifetime [{}, {})", t1, t2,
                     lifetime_.start(), lifetime_.end()));
  }
  TemporalEdge& e = edge_slot(u, v);
  e.presence.insert(piece);
  if (label) e.label = std::move(label);
  return e;
}

const TemporalEdge& TimeVaryingGraph::declare_edge(NodeId u, NodeId v) {
  return edge_slot(u, v);
}

void TimeVaryingGraph::set_latency(NodeId u, NodeId v, TimeInterval when,
                                   Duration duration) {
  require_mutable();
  if (!(duration >= 0) || duration == kInfinity) {
    fail(ErrorCode::kInvalidArgument, "latency must be finite and >= 0");
  }
  auto it = edges_.find(canonical(u, v));
  if (it == edges_.end()) {
    fail(ErrorCode::kNotFound, fmt::format("no edge ({}, {})", node_name(u),
                                           node_name(v)));
  }
  TemporalEdge& e = it->second;
  auto holder = e.presence.find(when.start());
  if (!holder || !holder->contains(when)) {
    fail(ErrorCode::kInvalidArgument,
         "latency piece must lie inside one presence interval");
  }
  auto pos = std::lower_bound(
      e.latency.begin(), e.latency.end(), when.start(),
      [](const LatencyPiece& p, Time t) { return p.when.start() < t; });
  bool overlaps_next = pos != e.latency.end() && pos->when.start() < when.end();
  bool overlaps_prev =
      pos != e.latency.begin() && std::prev(pos)->when.end() > when.start();
  if (overlaps_next || overlaps_prev) {
    fail(ErrorCode::kInvalidArgument, "latency pieces must be disjoint");
  }
  e.latency.insert(pos, LatencyPiece{when, duration});
}

const TemporalEdge* TimeVaryingGraph::edge(NodeId u, NodeId v) const {
  auto it = edges_.find(canonical(u, v));
  return it == edges_.end() ? nullptr : &it->second;
}

const TemporalEdge& TimeVaryingGraph::edge_or_throw(NodeId u, NodeId v) const {
  require_node(u);
  require_node(v);
  const TemporalEdge* e = edge(u, v);
  if (!e) {
    fail(ErrorCode::kNotFound, fmt::format("no edge ({}, {})", node_name(u),
                                           node_name(v)));
  }
  return *e;
}

bool TimeVaryingGraph::presence(NodeId u, NodeId v, Time t) const {
  const TemporalEdge* e = edge(u, v);
  return e != nullptr && e->presence.contains(t);
}

const std::vector<NodeId>& TimeVaryingGraph::out_neighbours(NodeId id) const {
  require_node(id);
  return out_[id.index];
}

Duration latency(const TemporalEdge& edge, Time t) {
  if (!edge.presence.contains(t)) {
    fail(ErrorCode::kUnavailable,
         fmt::format("edge ({}, {}) is not present at {}", edge.key.u.index,
                     edge.key.v.index, t));
  }
  auto it = std::upper_bound(
      edge.latency.begin(), edge.latency.end(), t,
      [](Time v, const LatencyPiece& p) { return v < p.when.start(); });
  if (it == edge.latency.begin()) return 0;
  --it;
  return it->when.contains(t) ? it->duration : 0;
}

const IntervalSet& available_dates(const TemporalEdge& edge) {
  return edge.presence;
}

CharacteristicDates edge_characteristic_dates(const TemporalEdge& edge) {
  CharacteristicDates out;
  for (const auto& iv : edge.presence.intervals()) {
    out.appearances.push_back(iv.start());
    out.combined.push_back(iv.start());
    if (iv.bounded()) {
      out.disappearances.push_back(iv.end());
      out.combined.push_back(iv.end());
    }
  }
  return out;
}

StaticGraph footprint(const TimeVaryingGraph& graph) {
  StaticGraph out;
  out.nodes.reserve(graph.node_count());
  for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
    out.nodes.push_back(NodeId{i});
  }
  for (const auto& [key, e] : graph.edges()) {
    if (!e.presence.empty()) out.edges.push_back(key);
  }
  return out;
}

bool is_connected(const StaticGraph& graph) {
  if (graph.nodes.empty()) return true;
  std::uint32_t n = 0;
  for (NodeId id : graph.nodes) n = std::max(n, id.index + 1);
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : graph.edges) parent[root(e.u.index)] = root(e.v.index);
  std::uint32_t r = root(graph.nodes.front().index);
  return std::all_of(graph.nodes.begin(), graph.nodes.end(),
                     [&](NodeId id) { return root(id.index) == r; });
}

std::vector<Time> graph_characteristic_dates(const TimeVaryingGraph& graph) {
  std::vector<Time> dates;
  for (const auto& [key, e] : graph.edges()) {
    auto st = edge_characteristic_dates(e).combined;
    dates.insert(dates.end(), st.begin(), st.end());
  }
  std::sort(dates.begin(), dates.end());
  dates.erase(std::unique(dates.begin(), dates.end()), dates.end());
  return dates;
}

std::vector<Snapshot> snapshots(const TimeVaryingGraph& graph) {
  const TimeInterval& life = graph.lifetime();
  std::vector<Time> cuts = graph_characteristic_dates(graph);
  if (cuts.empty() || cuts.front() != life.start()) {
    cuts.insert(cuts.begin(), life.start());
  }
  if (cuts.back() != life.end()) cuts.push_back(life.end());

  std::vector<NodeId> nodes = footprint(graph).nodes;
  std::vector<Snapshot> out;
  out.reserve(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Snapshot snap{TimeInterval(cuts[i], cuts[i + 1]), {nodes, {}}};
    // Presence is constant on [cuts[i], cuts[i+1]), so its start decides.
    for (const auto& [key, e] : graph.edges()) {
      if (e.presence.contains(cuts[i])) snap.graph.edges.push_back(key);
    }
    out.push_back(std::move(snap));
  }
  return out;
}

}  // namespace tvgop
