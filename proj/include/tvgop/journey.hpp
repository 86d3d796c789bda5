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

#ifndef TVGOP_JOURNEY_HPP_
#define TVGOP_JOURNEY_HPP_

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "tvgop/tvg.hpp"

namespace tvgop {

/// One crossing of an edge. `from`/`to` orient the hop along the walk; on
/// undirected graphs both orientations name the same edge.
struct Hop {
  NodeId from;
  NodeId to;
  Time departure;
  bool operator==(const Hop&) const = default;
};

struct Journey {
  NodeId source;
  std::vector<Hop> hops;
  Time arrival;

  NodeId destination() const { return hops.empty() ? source : hops.back().to; }
};

/// Checks the walk, presence and non-decreasing (latency-adjusted) departure
/// conditions. Hops naming edges absent from the graph throw kNotFound.
bool is_journey(const TimeVaryingGraph& graph, NodeId source,
                std::span<const Hop> hops);

/// Earliest possible arrival at `to` when standing at `from` at time `ready`,
/// together with the departure achieving it. Empty when the edge never
/// reappears.
struct Crossing {
  Time departure;
  Time arrival;
};
std::optional<Crossing> earliest_crossing(const TemporalEdge& edge, Time ready);

/// Journey u -> v with minimal arrival among journeys departing at or after
/// `start`. Ties prefer fewer hops, then the lexicographically smallest node
/// sequence.
std::optional<Journey> foremost_journey(const TimeVaryingGraph& graph,
                                        NodeId u, NodeId v, Time start);

/// Earliest arrival time at every node from `u` (infinity when unreachable).
std::vector<Time> earliest_arrivals(const TimeVaryingGraph& graph, NodeId u,
                                    Time start);

std::set<NodeId> reachability_set(const TimeVaryingGraph& graph, NodeId u,
                                  Time start);

/// Entry [u][v] is true iff some journey u -> v departs and arrives inside
/// `window`. The diagonal is always true.
std::vector<std::vector<bool>> mutual_reachability_matrix(
    const TimeVaryingGraph& graph, const TimeInterval& window);

bool is_temporally_connected(const TimeVaryingGraph& graph,
                             std::span<const NodeId> subset,
                             const TimeInterval& window);

}  // namespace tvgop

#endif  // TVGOP_JOURNEY_HPP_
