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

#ifndef TVGOP_DYNAMICS_HPP_
#define TVGOP_DYNAMICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tvgop/epistemic.hpp"
#include "tvgop/metrics.hpp"
#include "tvgop/tvg.hpp"

namespace tvgop {

enum class Mode { kClassic, kCognitive };

struct SimConfig {
  std::string topic_id = "p";
  Mode mode = Mode::kClassic;
  double eps = 0.2;      // classic
  double eps_max = 0.2;  // cognitive
  double k = kDefaultResistanceK;
  // Window handed to activation; each mind's lifetime when unset.
  std::optional<TimeInterval> activation_window;
  double mu = 0.5;
  double delta_plus = 0.1;
  double delta_minus = 0.0;
  std::uint64_t seed = 0;
  std::size_t max_events = 100000;
  double convergence_tol = 1e-9;
  std::size_t convergence_window = 1000;  // 0 disables early stopping
  double cluster_gap = kDefaultClusterGap;

  /// Every violated constraint, one message per field.
  std::vector<std::string> violations() const;
  void validate() const;
};

struct Agent {
  NodeId id;
  std::string name;
  MindGraph mind;

  double opinion(const std::string& topic_id) const;
  double confidence(const std::string& topic_id) const;
};

/// Per-tick pair sampling for societies whose contacts are long-lived: at
/// each integer tick one edge present at that tick is drawn uniformly.
struct TickSampling {
  std::size_t ticks = 0;
  std::mt19937_64 engine;
};

struct Society {
  std::vector<Agent> agents;  // agents[i].id == NodeId{i} in `contacts`
  TimeVaryingGraph contacts;
  std::optional<TickSampling> sampling;
};

struct ScheduledContact {
  Time time;
  NodeId first;   // smaller id
  NodeId second;  // larger id
  bool operator==(const ScheduledContact&) const = default;
};

/// Appearance-date events of every social edge, sorted by (time, ids); or,
/// when the society carries TickSampling, one sampled pair per tick.
std::vector<ScheduledContact> contact_schedule(const Society& society);

struct EventRecord {
  std::size_t index = 0;
  Time time = 0;
  NodeId i;
  NodeId j;
  double x_i_pre = 0, x_j_pre = 0, x_i_post = 0, x_j_post = 0;
  double c_i_pre = 0, c_j_pre = 0, c_i_post = 0, c_j_post = 0;
  double eps_i = 0, eps_j = 0;
  bool updated_i = false, updated_j = false;
};

/// Bounded-confidence exchange between two agents on config.topic_id. Both
/// sides decide from pre-interaction values, each under its own tolerance.
EventRecord interact(Agent& a, Agent& b, Time t, const SimConfig& config);

struct Trajectory {
  std::vector<std::string> agent_names;
  std::vector<double> initial_opinions;
  std::vector<double> initial_confidences;
  std::vector<EventRecord> events;
  std::vector<double> final_opinions;
  std::vector<double> final_confidences;
  std::optional<std::size_t> converged_at;  // index of the triggering event
};

Trajectory run(const Society& society, const SimConfig& config);

enum class SocietyKind { kCompleteStatic, kRandomPairwise, kRingStatic, kTrace };

const char* society_kind_name(SocietyKind kind);
std::optional<SocietyKind> parse_society_kind(const std::string& text);

struct SocietyParams {
  std::string topic_id = "p";
  std::size_t ticks = 10000;    // static kinds, and sampled traces
  std::size_t contacts = 0;     // random_pairwise; 0 means 10 * n
  std::size_t horizon = 0;      // random_pairwise; 0 means `contacts`
  std::size_t support_nodes = 0;
  double topic_confidence = 0.0;
  double support_confidence = 0.5;
  // kTrace only.
  std::optional<TimeVaryingGraph> trace;
  std::map<std::string, MindGraph> minds;  // by agent name
  bool sampled = false;
};

/// Builds a society. The single engine seeded with `seed` is consumed in a
/// fixed order: initial opinions (agent order), then contact sampling, then
/// per-tick pair sampling during scheduling.
Society generate_society(SocietyKind kind, std::size_t n,
                         const SocietyParams& params, std::uint64_t seed);

/// Mind with the topic node plus `support_nodes` support representations
/// correlated to it over the whole lifetime.
MindGraph default_mind(const SocietyParams& params, double opinion);

}  // namespace tvgop

#endif  // TVGOP_DYNAMICS_HPP_
