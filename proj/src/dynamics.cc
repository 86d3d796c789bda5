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

#include "tvgop/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "tvgop/error.hpp"

namespace tvgop {

namespace {

bool unit(double x) { return x >= 0 && x <= 1; }

}  // namespace

std::vector<std::string> SimConfig::violations() const {
  std::vector<std::string> out;
  auto check_unit = [&](const char* name, double v) {
    if (!unit(v)) out.push_back(fmt::format("{}: must lie in [0, 1], got {}", name, v));
  };
  if (topic_id.empty()) out.emplace_back("topic: must not be empty");
  check_unit("eps", eps);
  check_unit("eps_max", eps_max);
  if (!(k >= 0) || std::isinf(k)) {
    out.push_back(fmt::format("k: must be finite and >= 0, got {}", k));
  }
  check_unit("mu", mu);
  check_unit("delta_plus", delta_plus);
  check_unit("delta_minus", delta_minus);
  if (!(convergence_tol > 0)) {
    out.push_back(fmt::format("convergence_tol: must be > 0, got {}",
                              convergence_tol));
  }
  if (!(cluster_gap > 0)) {
    out.push_back(fmt::format("cluster_gap: must be > 0, got {}", cluster_gap));
  }
  return out;
}

void SimConfig::validate() const {
  auto issues = violations();
  if (issues.empty()) return;
  std::string msg = "invalid simulation config: ";
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) msg += "; ";
    msg += issues[i];
  }
  fail(ErrorCode::kInvalidArgument, msg);
}

double Agent::opinion(const std::string& topic_id) const {
  return mind.rep(mind.node_for(topic_id)).truth_subjective;
}

double Agent::confidence(const std::string& topic_id) const {
  return mind.rep(mind.node_for(topic_id)).confidence;
}

std::vector<ScheduledContact> contact_schedule(const Society& society) {
  const TimeVaryingGraph& g = society.contacts;
  std::vector<ScheduledContact> out;
  auto ordered = [](Time t, NodeId a, NodeId b) {
    if (b < a) std::swap(a, b);
    return ScheduledContact{t, a, b};
  };

  if (!society.sampling) {
    for (const auto& [key, e] : g.edges()) {
      for (const auto& iv : e.presence.intervals()) {
        out.push_back(ordered(iv.start(), key.u, key.v));
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return std::tie(a.time, a.first, a.second) <
             std::tie(b.time, b.first, b.second);
    });
    return out;
  }

  std::mt19937_64 engine = society.sampling->engine;
  const std::vector<Time> dates = graph_characteristic_dates(g);
  std::vector<EdgeKey> present;
  std::size_t next_date = 0;
  bool stale = true;
  out.reserve(society.sampling->ticks);
  for (std::size_t tick = 0; tick < society.sampling->ticks; ++tick) {
    const Time t = static_cast<Time>(tick);
    while (next_date < dates.size() && dates[next_date] <= t) {
      ++next_date;
      stale = true;
    }
    if (stale) {
      present.clear();
      for (const auto& [key, e] : g.edges()) {
        if (e.presence.contains(t)) present.push_back(key);
      }
      stale = false;
    }
    if (present.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, present.size() - 1);
    const EdgeKey& key = present[pick(engine)];
    out.push_back(ordered(t, key.u, key.v));
  }
  return out;
}

EventRecord interact(Agent& a, Agent& b, Time t, const SimConfig& config) {
  EpistemicRep& ra = a.mind.rep(a.mind.node_for(config.topic_id));
  EpistemicRep& rb = b.mind.rep(b.mind.node_for(config.topic_id));

  EventRecord rec;
  rec.time = t;
  rec.i = a.id;
  rec.j = b.id;
  rec.x_i_pre = ra.truth_subjective;
  rec.x_j_pre = rb.truth_subjective;
  rec.c_i_pre = ra.confidence;
  rec.c_j_pre = rb.confidence;

  if (config.mode == Mode::kClassic) {
    rec.eps_i = rec.eps_j = config.eps;
  } else {
    auto tolerance = [&](const Agent& self, const Agent& other) {
      TimeInterval window =
          config.activation_window.value_or(self.mind.graph().lifetime());
      return tolerance_of(self.mind, ExternalEvent{config.topic_id, t, other.name},
                          config.eps_max, config.k, window);
    };
    rec.eps_i = tolerance(a, b);
    rec.eps_j = tolerance(b, a);
  }

  const double gap = std::abs(rec.x_j_pre - rec.x_i_pre);
  rec.updated_i = gap < rec.eps_i;
  rec.updated_j = gap < rec.eps_j;
  if (rec.updated_i) {
    ra.truth_subjective = std::clamp(
        rec.x_i_pre + config.mu * (rec.x_j_pre - rec.x_i_pre), 0.0, 1.0);
  }
  if (rec.updated_j) {
    rb.truth_subjective = std::clamp(
        rec.x_j_pre + config.mu * (rec.x_i_pre - rec.x_j_pre), 0.0, 1.0);
  }
  ra = confidence_update(ra, rec.updated_i, config.delta_plus,
                         config.delta_minus);
  rb = confidence_update(rb, rec.updated_j, config.delta_plus,
                         config.delta_minus);

  rec.x_i_post = ra.truth_subjective;
  rec.x_j_post = rb.truth_subjective;
  rec.c_i_post = ra.confidence;
  rec.c_j_post = rb.confidence;
  return rec;
}

Trajectory run(const Society& society, const SimConfig& config) {
  config.validate();
  for (const Agent& agent : society.agents) {
    if (!agent.mind.has_topic_node(config.topic_id)) {
      fail(ErrorCode::kNotFound,
           fmt::format("agent '{}' holds no representation of topic '{}'",
                       agent.name, config.topic_id));
    }
  }

  std::vector<Agent> agents = society.agents;
  Trajectory traj;
  for (const Agent& agent : agents) {
    traj.agent_names.push_back(agent.name);
    traj.initial_opinions.push_back(agent.opinion(config.topic_id));
    traj.initial_confidences.push_back(agent.confidence(config.topic_id));
  }

  // Length of the current run of events whose accepted moves were all below
  // the tolerance; equivalent to converged() over the recorded moves.
  std::size_t quiet = 0;
  for (const ScheduledContact& c : contact_schedule(society)) {
    if (traj.events.size() >= config.max_events) break;
    EventRecord rec = interact(agents[c.first.index], agents[c.second.index],
                               c.time, config);
    rec.index = traj.events.size();
    bool still = (!rec.updated_i ||
                  std::abs(rec.x_i_post - rec.x_i_pre) < config.convergence_tol) &&
                 (!rec.updated_j ||
                  std::abs(rec.x_j_post - rec.x_j_pre) < config.convergence_tol);
    quiet = still ? quiet + 1 : 0;
    traj.events.push_back(rec);
    if (config.convergence_window > 0 && quiet >= config.convergence_window) {
      traj.converged_at = rec.index;
      break;
    }
  }

  for (const Agent& agent : agents) {
    traj.final_opinions.push_back(agent.opinion(config.topic_id));
    traj.final_confidences.push_back(agent.confidence(config.topic_id));
  }
  return traj;
}

const char* society_kind_name(SocietyKind kind) {
  switch (kind) {
    case SocietyKind::kCompleteStatic:
      return "complete_static";
    case SocietyKind::kRandomPairwise:
      return "random_pairwise";
    case SocietyKind::kRingStatic:
      return "ring_static";
    case SocietyKind::kTrace:
      return "trace";
  }
  return "unknown";
}

std::optional<SocietyKind> parse_society_kind(const std::string& text) {
  for (auto kind : {SocietyKind::kCompleteStatic, SocietyKind::kRandomPairwise,
                    SocietyKind::kRingStatic, SocietyKind::kTrace}) {
    if (text == society_kind_name(kind)) return kind;
  }
  return std::nullopt;
}

MindGraph default_mind(const SocietyParams& params, double opinion) {
  MindGraph mind;
  NodeId topic = mind.add_rep(EpistemicRep{params.topic_id, 0.0, opinion,
                                           params.topic_confidence,
                                           RepKind::kOpinion});
  for (std::size_t s = 1; s <= params.support_nodes; ++s) {
    NodeId support = mind.add_rep(EpistemicRep{
        fmt::format("{}.support{}", params.topic_id, s), 0.5, 0.5,
        params.support_confidence, std::nullopt});
    mind.correlate(topic, support, 0, kInfinity);
  }
  return mind;
}

namespace {

void require_params(const SocietyParams& p) {
  if (!unit(p.topic_confidence) || !unit(p.support_confidence)) {
    fail(ErrorCode::kInvalidArgument,
         "society confidences must lie in [0, 1]");
  }
  if (p.topic_id.empty()) {
    fail(ErrorCode::kInvalidArgument, "society topic must not be empty");
  }
}

}  // namespace

Society generate_society(SocietyKind kind, std::size_t n,
                         const SocietyParams& params, std::uint64_t seed) {
  require_params(params);
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> unit_draw(0.0, 1.0);

  if (kind == SocietyKind::kTrace) {
    if (!params.trace) {
      fail(ErrorCode::kInvalidArgument, "trace society needs a contact trace");
    }
    TimeVaryingGraph contacts = *params.trace;
    for (const auto& [name, mind] : params.minds) contacts.ensure_node(name);
    if (contacts.node_count() < 2) {
      fail(ErrorCode::kInvalidArgument,
           fmt::format("a society needs at least 2 agents, got {}",
                       contacts.node_count()));
    }
    Society society{{}, contacts, std::nullopt};
    for (std::uint32_t i = 0; i < contacts.node_count(); ++i) {
      NodeId id{i};
      std::string name = contacts.node_name(id);
      auto it = params.minds.find(name);
      MindGraph mind = it != params.minds.end()
                           ? it->second
                           : default_mind(params, unit_draw(engine));
      society.agents.push_back(Agent{id, name, std::move(mind)});
    }
    if (params.sampled) {
      society.sampling = TickSampling{params.ticks, engine};
    }
    society.contacts.freeze();
    return society;
  }

  if (n < 2) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("a society needs at least 2 agents, got {}", n));
  }
  if ((kind == SocietyKind::kCompleteStatic ||
       kind == SocietyKind::kRingStatic) && params.ticks == 0) {
    fail(ErrorCode::kInvalidArgument, "ticks must be >= 1");
  }

  std::vector<Agent> agents;
  for (std::uint32_t i = 0; i < n; ++i) {
    double x = unit_draw(engine);
    agents.push_back(Agent{NodeId{i}, std::to_string(i), default_mind(params, x)});
  }

  const std::size_t m = params.contacts ? params.contacts : 10 * n;
  const std::size_t horizon = params.horizon ? params.horizon : m;
  const Time end = kind == SocietyKind::kRandomPairwise
                       ? static_cast<Time>(horizon)
                       : static_cast<Time>(params.ticks);
  Society society{std::move(agents), TimeVaryingGraph(TimeInterval(0, end)),
                  std::nullopt};
  TimeVaryingGraph& g = society.contacts;
  for (const Agent& a : society.agents) g.add_node(a.name);

  switch (kind) {
    case SocietyKind::kCompleteStatic:
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
          g.add_contact(NodeId{i}, NodeId{j}, 0, end);
        }
      }
      break;
    case SocietyKind::kRingStatic:
      for (std::uint32_t i = 0; i < n; ++i) {
        g.add_contact(NodeId{i}, NodeId{static_cast<std::uint32_t>((i + 1) % n)},
                      0, end);
      }
      break;
    case SocietyKind::kRandomPairwise: {
      std::uniform_int_distribution<std::uint32_t> first(0, n - 1);
      std::uniform_int_distribution<std::uint32_t> other(0, n - 2);
      std::uniform_int_distribution<std::size_t> when(0, horizon - 1);
      for (std::size_t c = 0; c < m; ++c) {
        std::uint32_t i = first(engine);
        std::uint32_t j = other(engine);
        if (j >= i) ++j;
        Time t = static_cast<Time>(when(engine));
        g.add_contact(NodeId{i}, NodeId{j}, t, t + 1);
      }
      break;
    }
    case SocietyKind::kTrace:
      break;
  }

  if (kind != SocietyKind::kRandomPairwise) {
    society.sampling = TickSampling{params.ticks, engine};
  }
  g.freeze();
  return society;
}

}  // namespace tvgop
