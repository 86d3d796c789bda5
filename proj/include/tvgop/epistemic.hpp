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

#ifndef TVGOP_EPISTEMIC_HPP_
#define TVGOP_EPISTEMIC_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tvgop/tvg.hpp"

namespace tvgop {

enum class PropositionKind { kFactual, kEvaluative };
enum class RepKind { kKnowledge, kBelief, kOpinion };

struct Proposition {
  std::string topic_id;
  std::optional<std::string> text;
  std::optional<PropositionKind> kind_tag;  // metadata only
};

/// A proposition together with its objective truth value, the holder's
/// subjective truth value and the holder's confidence, all in [0, 1].
struct EpistemicRep {
  std::string topic_id;
  double truth_objective = 0;
  double truth_subjective = 0;
  double confidence = 0;
  std::optional<RepKind> designated_kind;

  void validate() const;
};

struct KindSet {
  bool knowledge = false;
  bool belief = false;
  bool opinion = false;
  // nullopt means unclassified.
  std::optional<RepKind> primary;
};

/// Range-based taxonomy. `tau` relaxes the knowledge equality test.
KindSet classify(const EpistemicRep& rep, double tau = 0);

struct ExternalEvent {
  std::string topic_id;
  Time time = 0;
  std::optional<std::string> source;
};

/// One agent's representations: an undirected time-varying graph with one
/// node per topic, each carrying its EpistemicRep. Edges are correlations.
class MindGraph {
 public:
  explicit MindGraph(TimeInterval lifetime = TimeInterval(0, kInfinity));

  void add_topic(Proposition topic);
  const Proposition* topic(const std::string& topic_id) const;
  const std::map<std::string, Proposition>& topics() const { return topics_; }

  /// Adds the node for rep.topic_id; the topic is registered on demand.
  NodeId add_rep(EpistemicRep rep, std::optional<std::string> label = {});
  void correlate(NodeId u, NodeId v, Time t1, Time t2);

  NodeId node_for(const std::string& topic_id) const;
  bool has_topic_node(const std::string& topic_id) const;
  const EpistemicRep& rep(NodeId id) const;
  EpistemicRep& rep(NodeId id);

  const TimeVaryingGraph& graph() const { return graph_; }
  std::size_t size() const { return reps_.size(); }

 private:
  TimeVaryingGraph graph_;
  std::map<std::string, Proposition> topics_;
  std::map<std::string, NodeId> node_by_topic_;
  std::vector<EpistemicRep> reps_;
};

/// Nodes reachable by journeys from the event's topic node that depart and
/// arrive inside `window`. Always contains the topic node.
std::set<NodeId> activate(const MindGraph& mind, const ExternalEvent& event,
                          const TimeInterval& window);

inline constexpr double kDefaultResistanceK = 3.0;

/// mean(confidence) * |C| / (|C| + k): the first factor aggregates the
/// activated confidences, the second saturates with the number of
/// supporting representations.
double resistance(const MindGraph& mind, const std::set<NodeId>& component,
                  double k = kDefaultResistanceK);

/// eps_max * (1 - resistance of the activated component).
double tolerance_of(const MindGraph& mind, const ExternalEvent& event,
                    double eps_max, double k, const TimeInterval& window);

/// Agreement moves confidence toward 1 by delta_plus of the remaining gap;
/// disagreement scales it by (1 - delta_minus).
EpistemicRep confidence_update(EpistemicRep rep, bool agreed,
                               double delta_plus, double delta_minus);

const char* rep_kind_name(RepKind kind);
std::optional<RepKind> parse_rep_kind(const std::string& text);
const char* proposition_kind_name(PropositionKind kind);
std::optional<PropositionKind> parse_proposition_kind(const std::string& text);

}  // namespace tvgop

#endif  // TVGOP_EPISTEMIC_HPP_
