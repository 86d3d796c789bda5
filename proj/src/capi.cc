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

#include "tvgop/tvgop.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>
#include <new>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "tvgop/dynamics.hpp"
#include "tvgop/error.hpp"
#include "tvgop/io.hpp"
#include "tvgop/journey.hpp"
#include "tvgop/metrics.hpp"
#include "tvgop/tvg.hpp"

struct tvgop_graph {
  tvgop::TimeVaryingGraph graph;
  // Backing storage for tvgop_graph_node_name.
  mutable std::vector<std::string> names;
};

struct tvgop_journey {
  tvgop::Journey journey;
};

struct tvgop_sim {
  tvgop::SimulationSpec spec;
};

struct tvgop_society {
  tvgop::Society society;
};

struct tvgop_trajectory {
  tvgop::Trajectory traj;
  tvgop::SimConfig config;
};

namespace {

thread_local std::string last_error;

tvgop_status to_status(tvgop::ErrorCode code) {
  return static_cast<tvgop_status>(static_cast<int>(code));
}

template <class Fn>
tvgop_status guarded(Fn&& fn) {
  try {
    fn();
    return TVGOP_OK;
  } catch (const tvgop::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TVGOP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TVGOP_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) tvgop::fail(tvgop::ErrorCode::kInvalidArgument, what);
}

template <class T>
void fill(const std::vector<T>& items, T* buf, size_t cap, size_t* count) {
  require(count != nullptr, "count pointer is null");
  require(buf != nullptr || cap == 0, "buffer is null but cap > 0");
  *count = items.size();
  std::copy_n(items.begin(), std::min(cap, items.size()), buf);
}

tvgop::NodeId node(uint32_t id) { return tvgop::NodeId{id}; }

std::string utc_now() {
  std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

template <class Fn>
void write_stream(const char* path, Fn&& fn) {
  require(path != nullptr, "path is null");
  std::ostringstream out;
  fn(out);
  tvgop::write_file(path, out.str());
}

}  // namespace

extern "C" {

const char* tvgop_version(void) { return tvgop::kVersion; }

const char* tvgop_last_error(void) { return last_error.c_str(); }

const char* tvgop_status_name(tvgop_status status) {
  switch (status) {
    case TVGOP_OK:
      return "ok";
    case TVGOP_ERR_INTERNAL:
      return "internal";
    default:
      return tvgop::error_code_name(static_cast<tvgop::ErrorCode>(status));
  }
}

// ---- graphs ----------------------------------------------------------------

tvgop_status tvgop_graph_create(int directed, double life_start,
                                double life_end, tvgop_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out pointer is null");
    *out = new tvgop_graph{
        tvgop::TimeVaryingGraph(tvgop::TimeInterval(life_start, life_end),
                                directed != 0),
        {}};
  });
}

tvgop_status tvgop_graph_load_trace(const char* path, int directed,
                                    int has_lifetime, double life_start,
                                    double life_end, tvgop_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    tvgop::TraceOptions options{directed != 0, std::nullopt};
    if (has_lifetime) options.lifetime = tvgop::TimeInterval(life_start, life_end);
    *out = new tvgop_graph{tvgop::read_trace_file(path, options), {}};
  });
}

void tvgop_graph_destroy(tvgop_graph* graph) { delete graph; }

tvgop_status tvgop_graph_add_node(tvgop_graph* graph, const char* label,
                                  uint32_t* out_id) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    std::optional<std::string> l;
    if (label) l = label;
    tvgop::NodeId id = graph->graph.add_node(std::move(l));
    if (out_id) *out_id = id.index;
  });
}

tvgop_status tvgop_graph_find_node(const tvgop_graph* graph, const char* label,
                                   uint32_t* out_id) {
  return guarded([&] {
    require(graph != nullptr && label != nullptr && out_id != nullptr,
            "null argument");
    auto id = graph->graph.find_node(label);
    if (!id) {
      tvgop::fail(tvgop::ErrorCode::kNotFound,
                  fmt::format("unknown node '{}'", label));
    }
    *out_id = id->index;
  });
}

tvgop_status tvgop_graph_add_contact(tvgop_graph* graph, uint32_t u,
                                     uint32_t v, double t1, double t2) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    graph->graph.add_contact(node(u), node(v), t1, t2);
  });
}

tvgop_status tvgop_graph_set_latency(tvgop_graph* graph, uint32_t u,
                                     uint32_t v, double t1, double t2,
                                     double duration) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    graph->graph.set_latency(node(u), node(v), tvgop::TimeInterval(t1, t2),
                             duration);
  });
}

void tvgop_graph_freeze(tvgop_graph* graph) {
  if (graph) graph->graph.freeze();
}

size_t tvgop_graph_node_count(const tvgop_graph* graph) {
  return graph ? graph->graph.node_count() : 0;
}

size_t tvgop_graph_edge_count(const tvgop_graph* graph) {
  return graph ? graph->graph.edge_count() : 0;
}

const char* tvgop_graph_node_name(const tvgop_graph* graph, uint32_t id) {
  if (!graph || !graph->graph.contains(node(id))) return nullptr;
  if (graph->names.size() != graph->graph.node_count()) {
    graph->names.clear();
    for (uint32_t i = 0; i < graph->graph.node_count(); ++i) {
      graph->names.push_back(graph->graph.node_name(node(i)));
    }
  }
  return graph->names[id].c_str();
}

tvgop_status tvgop_graph_edge_at(const tvgop_graph* graph, size_t index,
                                 uint32_t* u, uint32_t* v) {
  return guarded([&] {
    require(graph != nullptr && u != nullptr && v != nullptr, "null argument");
    const auto& edges = graph->graph.edges();
    if (index >= edges.size()) {
      tvgop::fail(tvgop::ErrorCode::kNotFound,
                  fmt::format("edge index {} out of range", index));
    }
    auto it = std::next(edges.begin(), static_cast<std::ptrdiff_t>(index));
    *u = it->first.u.index;
    *v = it->first.v.index;
  });
}

tvgop_status tvgop_graph_presence(const tvgop_graph* graph, uint32_t u,
                                  uint32_t v, double t, int* out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = graph->graph.presence(node(u), node(v), t) ? 1 : 0;
  });
}

tvgop_status tvgop_graph_latency(const tvgop_graph* graph, uint32_t u,
                                 uint32_t v, double t, double* out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = tvgop::latency(graph->graph.edge_or_throw(node(u), node(v)), t);
  });
}

tvgop_status tvgop_graph_available_dates(const tvgop_graph* graph, uint32_t u,
                                         uint32_t v, double* buf, size_t cap,
                                         size_t* count) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    std::vector<double> flat;
    const auto& e = graph->graph.edge_or_throw(node(u), node(v));
    for (const auto& iv : tvgop::available_dates(e).intervals()) {
      flat.push_back(iv.start());
      flat.push_back(iv.end());
    }
    fill(flat, buf, cap, count);
  });
}

tvgop_status tvgop_graph_edge_dates(const tvgop_graph* graph, uint32_t u,
                                    uint32_t v, tvgop_date_kind kind,
                                    double* buf, size_t cap, size_t* count) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    auto dates = tvgop::edge_characteristic_dates(
        graph->graph.edge_or_throw(node(u), node(v)));
    switch (kind) {
      case TVGOP_DATES_APPEARANCE:
        fill(dates.appearances, buf, cap, count);
        break;
      case TVGOP_DATES_DISAPPEARANCE:
        fill(dates.disappearances, buf, cap, count);
        break;
      case TVGOP_DATES_COMBINED:
        fill(dates.combined, buf, cap, count);
        break;
      default:
        require(false, "unknown date kind");
    }
  });
}

tvgop_status tvgop_graph_characteristic_dates(const tvgop_graph* graph,
                                              double* buf, size_t cap,
                                              size_t* count) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    fill(tvgop::graph_characteristic_dates(graph->graph), buf, cap, count);
  });
}

tvgop_status tvgop_graph_footprint(const tvgop_graph* graph,
                                   size_t* edge_count, int* connected) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    tvgop::StaticGraph fp = tvgop::footprint(graph->graph);
    if (edge_count) *edge_count = fp.edges.size();
    if (connected) *connected = tvgop::is_connected(fp) ? 1 : 0;
  });
}

size_t tvgop_graph_snapshot_count(const tvgop_graph* graph) {
  return graph ? tvgop::snapshots(graph->graph).size() : 0;
}

tvgop_status tvgop_graph_write_snapshots_csv(const tvgop_graph* graph,
                                             const char* path) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    write_stream(path, [&](std::ostream& out) {
      tvgop::write_snapshots_csv(graph->graph, out);
    });
  });
}

// ---- journeys --------------------------------------------------------------

tvgop_status tvgop_graph_foremost_journey(const tvgop_graph* graph, uint32_t u,
                                          uint32_t v, double start,
                                          tvgop_journey** out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto j = tvgop::foremost_journey(graph->graph, node(u), node(v), start);
    if (j) *out = new tvgop_journey{std::move(*j)};
  });
}

void tvgop_journey_destroy(tvgop_journey* journey) { delete journey; }

size_t tvgop_journey_hop_count(const tvgop_journey* journey) {
  return journey ? journey->journey.hops.size() : 0;
}

tvgop_status tvgop_journey_hop(const tvgop_journey* journey, size_t index,
                               uint32_t* from, uint32_t* to,
                               double* departure) {
  return guarded([&] {
    require(journey != nullptr, "journey is null");
    if (index >= journey->journey.hops.size()) {
      tvgop::fail(tvgop::ErrorCode::kNotFound, "hop index out of range");
    }
    const tvgop::Hop& h = journey->journey.hops[index];
    if (from) *from = h.from.index;
    if (to) *to = h.to.index;
    if (departure) *departure = h.departure;
  });
}

double tvgop_journey_arrival(const tvgop_journey* journey) {
  return journey ? journey->journey.arrival : tvgop::kInfinity;
}

tvgop_status tvgop_graph_reachability(const tvgop_graph* graph, uint32_t u,
                                      double start, uint32_t* buf, size_t cap,
                                      size_t* count) {
  return guarded([&] {
    require(graph != nullptr, "graph is null");
    std::vector<uint32_t> ids;
    for (tvgop::NodeId id : tvgop::reachability_set(graph->graph, node(u), start)) {
      ids.push_back(id.index);
    }
    fill(ids, buf, cap, count);
  });
}

tvgop_status tvgop_graph_temporally_connected(const tvgop_graph* graph,
                                              const uint32_t* nodes, size_t n,
                                              double window_start,
                                              double window_end, int* out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    require(nodes != nullptr || n == 0, "node list is null");
    std::vector<tvgop::NodeId> subset;
    for (size_t i = 0; i < n; ++i) subset.push_back(node(nodes[i]));
    *out = tvgop::is_temporally_connected(
               graph->graph, subset,
               tvgop::TimeInterval(window_start, window_end))
               ? 1
               : 0;
  });
}

// ---- simulation ------------------------------------------------------------

tvgop_status tvgop_sim_load(const char* config_path, tvgop_sim** out) {
  return guarded([&] {
    require(config_path != nullptr && out != nullptr, "null argument");
    *out = new tvgop_sim{tvgop::read_simulation_spec(config_path)};
  });
}

tvgop_status tvgop_sim_from_params(const char* kind, size_t n, uint64_t seed,
                                   const char* params_json, tvgop_sim** out) {
  static const std::set<std::string> kSocietyKeys = {
      "ticks", "contacts", "horizon", "support_nodes", "topic_confidence",
      "support_confidence", "trace", "lifetime", "directed", "sampled", "minds"};
  return guarded([&] {
    require(kind != nullptr && out != nullptr, "null argument");
    nlohmann::json doc = {{"seed", seed},
                          {"society", {{"kind", kind}, {"n", n}}}};
    if (params_json && *params_json) {
      nlohmann::json extra;
      try {
        extra = nlohmann::json::parse(params_json);
      } catch (const nlohmann::json::parse_error& e) {
        tvgop::fail(tvgop::ErrorCode::kParse,
                    fmt::format("params: {}", e.what()));
      }
      require(extra.is_object(), "params must be a JSON object");
      for (const auto& [key, value] : extra.items()) {
        if (kSocietyKeys.contains(key)) {
          doc["society"][key] = value;
        } else {
          doc[key] = value;
        }
      }
    }
    *out = new tvgop_sim{tvgop::simulation_spec_from_json(doc, "")};
  });
}

void tvgop_sim_destroy(tvgop_sim* sim) { delete sim; }

uint64_t tvgop_sim_seed(const tvgop_sim* sim) {
  return sim ? sim->spec.sim.seed : 0;
}

const char* tvgop_sim_output_dir(const tvgop_sim* sim) {
  if (!sim || !sim->spec.output_dir) return nullptr;
  return sim->spec.output_dir->c_str();
}

tvgop_status tvgop_society_build(const tvgop_sim* sim, tvgop_society** out) {
  return guarded([&] {
    require(sim != nullptr && out != nullptr, "null argument");
    *out = new tvgop_society{tvgop::build_society(sim->spec)};
  });
}

void tvgop_society_destroy(tvgop_society* society) { delete society; }

size_t tvgop_society_agent_count(const tvgop_society* society) {
  return society ? society->society.agents.size() : 0;
}

size_t tvgop_society_contact_count(const tvgop_society* society) {
  if (!society) return 0;
  size_t total = 0;
  for (const auto& [key, e] : society->society.contacts.edges()) {
    total += e.presence.size();
  }
  return total;
}

tvgop_status tvgop_society_export(const tvgop_society* society,
                                  const tvgop_sim* sim, const char* dir) {
  return guarded([&] {
    require(society != nullptr && sim != nullptr && dir != nullptr,
            "null argument");
    tvgop::export_society(society->society, sim->spec, dir);
  });
}

tvgop_status tvgop_run(const tvgop_society* society, const tvgop_sim* sim,
                       tvgop_trajectory** out) {
  return guarded([&] {
    require(society != nullptr && sim != nullptr && out != nullptr,
            "null argument");
    *out = new tvgop_trajectory{tvgop::run(society->society, sim->spec.sim),
                                sim->spec.sim};
  });
}

void tvgop_trajectory_destroy(tvgop_trajectory* traj) { delete traj; }

size_t tvgop_trajectory_event_count(const tvgop_trajectory* traj) {
  return traj ? traj->traj.events.size() : 0;
}

size_t tvgop_trajectory_cluster_count(const tvgop_trajectory* traj) {
  if (!traj) return 0;
  return tvgop::clusters(traj->traj.final_opinions, traj->config.cluster_gap)
      .count;
}

int64_t tvgop_trajectory_converged_at(const tvgop_trajectory* traj) {
  if (!traj || !traj->traj.converged_at) return -1;
  return static_cast<int64_t>(*traj->traj.converged_at);
}

tvgop_status tvgop_trajectory_write_csv(const tvgop_trajectory* traj,
                                        const char* path) {
  return guarded([&] {
    require(traj != nullptr, "trajectory is null");
    write_stream(path, [&](std::ostream& out) {
      tvgop::write_trajectory_csv(traj->traj, out);
    });
  });
}

tvgop_status tvgop_trajectory_write_summary(const tvgop_trajectory* traj,
                                            const char* path) {
  return guarded([&] {
    require(traj != nullptr, "trajectory is null");
    write_stream(path, [&](std::ostream& out) {
      out << tvgop::summary_json(traj->traj, traj->config).dump(2) << '\n';
    });
  });
}

tvgop_status tvgop_trajectory_write_metrics(const tvgop_trajectory* traj,
                                            const char* path) {
  return guarded([&] {
    require(traj != nullptr, "trajectory is null");
    write_stream(path, [&](std::ostream& out) {
      tvgop::write_metrics_csv(traj->traj, traj->config.cluster_gap, out);
    });
  });
}

tvgop_status tvgop_manifest_write(const tvgop_sim* sim, const char* config_path,
                                  const char* const* outputs, size_t n_outputs,
                                  const char* path) {
  return guarded([&] {
    require(sim != nullptr && config_path != nullptr && path != nullptr,
            "null argument");
    require(outputs != nullptr || n_outputs == 0, "output list is null");
    tvgop::RunManifest m;
    m.tool_version = tvgop::kVersion;
    m.seed = sim->spec.sim.seed;
    m.config = tvgop::digest_file(config_path);
    for (const auto& p : tvgop::input_files(sim->spec)) {
      m.inputs.push_back(tvgop::digest_file(p));
    }
    for (size_t i = 0; i < n_outputs; ++i) {
      m.outputs.push_back(tvgop::digest_file(outputs[i]));
    }
    m.created_at = utc_now();
    tvgop::write_file(path, tvgop::manifest_to_json(m).dump(2) + "\n");
  });
}

tvgop_status tvgop_manifest_verify(const char* path, int* ok) {
  return guarded([&] {
    require(path != nullptr && ok != nullptr, "null argument");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(tvgop::read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
      tvgop::fail(tvgop::ErrorCode::kParse,
                  fmt::format("{}: {}", path, e.what()));
    }
    auto bad = tvgop::verify_manifest(tvgop::manifest_from_json(doc));
    *ok = bad.empty() ? 1 : 0;
    if (!bad.empty()) {
      last_error = fmt::format("digest mismatch: {}", fmt::join(bad, ", "));
    }
  });
}

}  // extern "C"
