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

#include "tvgop/epistemic.hpp"

#include <cmath>

#include <fmt/format.h>

#include "tvgop/error.hpp"
#include "tvgop/journey.hpp"

namespace tvgop {

namespace {

bool unit(double x) { return x >= 0 && x <= 1; }

void require_unit(const char* what, double x) {
  if (!unit(x)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("{} must lie in [0, 1], got {}", what, x));
  }
}

}  // namespace

void EpistemicRep::validate() const {
  require_unit("T_o", truth_objective);
  require_unit("T_s", truth_subjective);
  require_unit("d_c", confidence);
}

KindSet classify(const EpistemicRep& rep, double tau) {
  if (!(tau >= 0)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("knowledge tolerance must be >= 0, got {}", tau));
  }
  rep.validate();
  const double to = rep.truth_objective;
  const double ts = rep.truth_subjective;
  KindSet out;
  out.knowledge = std::abs(to - ts) <= tau;
  out.belief = to > 0 && to < 1 && unit(ts);
  out.opinion = to >= 0 && to < 1 && unit(ts);
  if (out.knowledge) {
    out.primary = RepKind::kKnowledge;
  } else if (out.belief) {
    out.primary = RepKind::kBelief;
  } else if (out.opinion) {
    out.primary = RepKind::kOpinion;
  }
  return out;
}

MindGraph::MindGraph(TimeInterval lifetime) : graph_(lifetime, false) {}

void MindGraph::add_topic(Proposition topic) {
  if (topics_.contains(topic.topic_id)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("duplicate topic '{}'", topic.topic_id));
  }
  std::string id = topic.topic_id;
  topics_.emplace(std::move(id), std::move(topic));
}

const Proposition* MindGraph::topic(const std::string& topic_id) const {
  auto it = topics_.find(topic_id);
  return it == topics_.end() ? nullptr : &it->second;
}

NodeId MindGraph::add_rep(EpistemicRep rep, std::optional<std::string> label) {
  rep.validate();
  if (node_by_topic_.contains(rep.topic_id)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("topic '{}' already has a node", rep.topic_id));
  }
  if (!topics_.contains(rep.topic_id)) {
    add_topic(Proposition{rep.topic_id, std::nullopt, std::nullopt});
  }
  NodeId id = graph_.add_node(label ? std::move(label) : rep.topic_id);
  node_by_topic_.emplace(rep.topic_id, id);
  reps_.push_back(std::move(rep));
  return id;
}

void MindGraph::correlate(NodeId u, NodeId v, Time t1, Time t2) {
  graph_.add_contact(u, v, t1, t2);
}

NodeId MindGraph::node_for(const std::string& topic_id) const {
  auto it = node_by_topic_.find(topic_id);
  if (it == node_by_topic_.end()) {
    fail(ErrorCode::kNotFound,
         fmt::format("mind holds no representation of topic '{}'", topic_id));
  }
  return it->second;
}

bool MindGraph::has_topic_node(const std::string& topic_id) const {
  return node_by_topic_.contains(topic_id);
}

const EpistemicRep& MindGraph::rep(NodeId id) const {
  graph_.require_node(id);
  return reps_[id.index];
}

EpistemicRep& MindGraph::rep(NodeId id) {
  graph_.require_node(id);
  return reps_[id.index];
}

std::set<NodeId> activate(const MindGraph& mind, const ExternalEvent& event,
                          const TimeInterval& window) {
  NodeId seed = mind.node_for(event.topic_id);
  auto best = earliest_arrivals(mind.graph(), seed, window.start());
  std::set<NodeId> out{seed};
  for (std::uint32_t i = 0; i < best.size(); ++i) {
    if (best[i] < window.end()) out.insert(NodeId{i});
  }
  return out;
}

double resistance(const MindGraph& mind, const std::set<NodeId>& component,
                  double k) {
  if (component.empty()) {
    fail(ErrorCode::kInvalidArgument, "resistance of an empty component");
  }
  if (!(k >= 0) || std::isinf(k)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("saturation constant k must be finite and >= 0, got {}",
                     k));
  }
  double sum = 0;
  for (NodeId id : component) sum += mind.rep(id).confidence;
  const double n = static_cast<double>(component.size());
  return (sum / n) * (n / (n + k));
}

double tolerance_of(const MindGraph& mind, const ExternalEvent& event,
                    double eps_max, double k, const TimeInterval& window) {
  require_unit("eps_max", eps_max);
  return eps_max * (1.0 - resistance(mind, activate(mind, event, window), k));
}

EpistemicRep confidence_update(EpistemicRep rep, bool agreed,
                               double delta_plus, double delta_minus) {
  require_unit("delta_plus", delta_plus);
  require_unit("delta_minus", delta_minus);
  if (agreed) {
    rep.confidence += delta_plus * (1.0 - rep.confidence);
  } else {
    rep.confidence *= 1.0 - delta_minus;
  }
  return rep;
}

const char* rep_kind_name(RepKind kind) {
  switch (kind) {
    case RepKind::kKnowledge:
      return "knowledge";
    case RepKind::kBelief:
      return "belief";
    case RepKind::kOpinion:
      return "opinion";
  }
  return "unclassified";
}

std::optional<RepKind> parse_rep_kind(const std::string& text) {
  if (text == "knowledge") return RepKind::kKnowledge;
  if (text == "belief") return RepKind::kBelief;
  if (text == "opinion") return RepKind::kOpinion;
  return std::nullopt;
}

const char* proposition_kind_name(PropositionKind kind) {
  return kind == PropositionKind::kFactual ? "factual" : "evaluative";
}

std::optional<PropositionKind> parse_proposition_kind(const std::string& text) {
  if (text == "factual") return PropositionKind::kFactual;
  if (text == "evaluative") return PropositionKind::kEvaluative;
  return std::nullopt;
}

}  // namespace tvgop
