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

#ifndef TVGOP_TVG_HPP_
#define TVGOP_TVG_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tvgop/interval.hpp"

namespace tvgop {

struct NodeId {
  std::uint32_t index = 0;
  auto operator<=>(const NodeId&) const = default;
};

struct EdgeKey {
  NodeId u;
  NodeId v;
  auto operator<=>(const EdgeKey&) const = default;
};

struct LatencyPiece {
  TimeInterval when;
  Duration duration;
};

/// An edge of a time-varying graph: its available dates plus an optional
/// piecewise-constant crossing latency (zero wherever no piece applies).
struct TemporalEdge {
  EdgeKey key;
  IntervalSet presence;
  std::vector<LatencyPiece> latency;  // sorted, disjoint, inside presence
  std::optional<std::string> label;
};

struct StaticGraph {
  std::vector<NodeId> nodes;
  std::vector<EdgeKey> edges;  // sorted
};

struct CharacteristicDates {
  std::vector<Time> appearances;
  std::vector<Time> disappearances;
  std::vector<Time> combined;
};

struct Snapshot {
  TimeInterval when;
  StaticGraph graph;
};

/// Time-varying graph (V, E, presence, latency, labels) over a lifetime.
///
/// Mutable while being built; freeze() turns every mutator into an error so
/// that the instance can be shared across readers.
class TimeVaryingGraph {
 public:
  explicit TimeVaryingGraph(TimeInterval lifetime, bool directed = false);

  NodeId add_node(std::optional<std::string> label = std::nullopt);
  // Returns the node carrying `label`, creating it if necessary.
  NodeId ensure_node(const std::string& label);
  std::optional<NodeId> find_node(const std::string& label) const;
  const std::optional<std::string>& node_label(NodeId id) const;
  std::string node_name(NodeId id) const;

  /// Adds contact [t1, t2) between u and v, creating the edge if absent.
  const TemporalEdge& add_contact(NodeId u, NodeId v, Time t1, Time t2,
                                  std::optional<std::string> label = {});
  /// Declares an edge with no contact yet; it stays out of the footprint.
  const TemporalEdge& declare_edge(NodeId u, NodeId v);
  void set_latency(NodeId u, NodeId v, TimeInterval when, Duration duration);

  bool presence(NodeId u, NodeId v, Time t) const;
  const TemporalEdge* edge(NodeId u, NodeId v) const;
  const TemporalEdge& edge_or_throw(NodeId u, NodeId v) const;

  EdgeKey canonical(NodeId u, NodeId v) const;
  bool contains(NodeId id) const noexcept { return id.index < labels_.size(); }
  void require_node(NodeId id) const;

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::map<EdgeKey, TemporalEdge>& edges() const noexcept {
    return edges_;
  }
  // Neighbours reachable by one hop out of `id` (both directions when
  // undirected), sorted by index.
  const std::vector<NodeId>& out_neighbours(NodeId id) const;

  const TimeInterval& lifetime() const noexcept { return lifetime_; }
  bool directed() const noexcept { return directed_; }

  void freeze() noexcept { frozen_ = true; }
  bool frozen() const noexcept { return frozen_; }

 private:
  void require_mutable() const;
  TemporalEdge& edge_slot(NodeId u, NodeId v);

  TimeInterval lifetime_;
  bool directed_;
  bool frozen_ = false;
  std::vector<std::optional<std::string>> labels_;
  std::unordered_map<std::string, NodeId> by_label_;
  std::map<EdgeKey, TemporalEdge> edges_;
  std::vector<std::vector<NodeId>> out_;
};

/// Crossing time of `edge` when departing at t. Throws kUnavailable when the
/// edge is absent at t.
Duration latency(const TemporalEdge& edge, Time t);

const IntervalSet& available_dates(const TemporalEdge& edge);

CharacteristicDates edge_characteristic_dates(const TemporalEdge& edge);

StaticGraph footprint(const TimeVaryingGraph& graph);

bool is_connected(const StaticGraph& graph);

/// Sorted, deduplicated union of the characteristic dates of every edge.
std::vector<Time> graph_characteristic_dates(const TimeVaryingGraph& graph);

/// Static snapshots between consecutive characteristic dates, padded with the
/// lifetime bounds so that the snapshots tile the whole lifetime.
std::vector<Snapshot> snapshots(const TimeVaryingGraph& graph);

}  // namespace tvgop

#endif  // TVGOP_TVG_HPP_
