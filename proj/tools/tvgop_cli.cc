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

// tvgop: command-line front end over the C API.
//
// Exit codes: 0 success, 2 usage or input error, 3 negative answer to a
// query (e.g. no journey exists). Errors are printed as one line:
//   error: <kind>: <message>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tvgop/tvgop.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNegative = 3;

// Thrown by check() to unwind to main with the library's error message.
struct Failure {
  tvgop_status status;
  std::string message;
};

void check(tvgop_status status) {
  if (status != TVGOP_OK) throw Failure{status, tvgop_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using GraphPtr =
    std::unique_ptr<tvgop_graph, Deleter<tvgop_graph, tvgop_graph_destroy>>;
using JourneyPtr = std::unique_ptr<tvgop_journey,
                                   Deleter<tvgop_journey, tvgop_journey_destroy>>;
using SimPtr = std::unique_ptr<tvgop_sim, Deleter<tvgop_sim, tvgop_sim_destroy>>;
using SocietyPtr =
    std::unique_ptr<tvgop_society,
                    Deleter<tvgop_society, tvgop_society_destroy>>;
using TrajectoryPtr =
    std::unique_ptr<tvgop_trajectory,
                    Deleter<tvgop_trajectory, tvgop_trajectory_destroy>>;

std::string fmt_time(double t) {
  if (std::isinf(t)) return "inf";
  std::ostringstream out;
  out.precision(17);
  out << t;
  return out.str();
}

std::string join_times(const std::vector<double>& ts) {
  std::string out = "[";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ",";
    out += fmt_time(ts[i]);
  }
  return out + "]";
}

struct TraceArgs {
  std::string path;
  bool directed = false;
  std::vector<double> lifetime;
};

void add_trace_options(CLI::App* cmd, TraceArgs& args) {
  cmd->add_option("trace", args.path, "Contact trace file")->required();
  cmd->add_flag("--directed", args.directed, "Treat contacts as directed");
  cmd->add_option("--lifetime", args.lifetime,
                  "Graph lifetime START END (default 0 inf)")
      ->expected(2);
}

GraphPtr load_graph(const TraceArgs& args) {
  tvgop_graph* g = nullptr;
  bool has_life = args.lifetime.size() == 2;
  check(tvgop_graph_load_trace(args.path.c_str(), args.directed ? 1 : 0,
                               has_life ? 1 : 0, has_life ? args.lifetime[0] : 0,
                               has_life ? args.lifetime[1] : 0, &g));
  tvgop_graph_freeze(g);
  return GraphPtr(g);
}

uint32_t find_node(const tvgop_graph* g, const std::string& name) {
  uint32_t id = 0;
  check(tvgop_graph_find_node(g, name.c_str(), &id));
  return id;
}

template <class T, class Fn>
std::vector<T> collect(Fn&& fn) {
  std::size_t count = 0;
  check(fn(nullptr, 0, &count));
  std::vector<T> out(count);
  check(fn(out.data(), out.size(), &count));
  return out;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  TraceArgs trace;
  std::string snapshots_csv;
  std::vector<std::string> reach;
};

int cmd_analyze(const AnalyzeArgs& args) {
  GraphPtr g = load_graph(args.trace);
  const tvgop_graph* graph = g.get();
  std::size_t n = tvgop_graph_node_count(graph);

  std::optional<std::pair<uint32_t, double>> reach;
  if (!args.reach.empty()) {
    char* end = nullptr;
    double t = std::strtod(args.reach[1].c_str(), &end);
    if (end == args.reach[1].c_str() || *end != '\0') {
      throw Failure{TVGOP_ERR_INVALID_ARGUMENT,
                    "--reach time '" + args.reach[1] + "' is not a number"};
    }
    reach = {find_node(graph, args.reach[0]), t};
  }

  std::size_t fp_edges = 0;
  int connected = 0;
  check(tvgop_graph_footprint(graph, &fp_edges, &connected));
  std::printf("nodes: %zu\n", n);
  std::printf("footprint: edges=%zu connected=%s\n", fp_edges,
              connected ? "yes" : "no");

  for (std::size_t i = 0; i < tvgop_graph_edge_count(graph); ++i) {
    uint32_t u = 0, v = 0;
    check(tvgop_graph_edge_at(graph, i, &u, &v));
    auto dates = [&](tvgop_date_kind kind) {
      return collect<double>([&](double* buf, std::size_t cap, std::size_t* c) {
        return tvgop_graph_edge_dates(graph, u, v, kind, buf, cap, c);
      });
    };
    std::printf("edge %s-%s: appearances=%s disappearances=%s dates=%s\n",
                tvgop_graph_node_name(graph, u), tvgop_graph_node_name(graph, v),
                join_times(dates(TVGOP_DATES_APPEARANCE)).c_str(),
                join_times(dates(TVGOP_DATES_DISAPPEARANCE)).c_str(),
                join_times(dates(TVGOP_DATES_COMBINED)).c_str());
  }
  auto st = collect<double>([&](double* buf, std::size_t cap, std::size_t* c) {
    return tvgop_graph_characteristic_dates(graph, buf, cap, c);
  });
  std::printf("characteristic_dates: %s\n", join_times(st).c_str());
  std::printf("snapshots: %zu\n", tvgop_graph_snapshot_count(graph));

  if (!args.snapshots_csv.empty()) {
    check(tvgop_graph_write_snapshots_csv(graph, args.snapshots_csv.c_str()));
  }
  if (reach) {
    auto ids = collect<uint32_t>([&](uint32_t* buf, std::size_t cap, std::size_t* c) {
      return tvgop_graph_reachability(graph, reach->first, reach->second, buf,
                                      cap, c);
    });
    std::vector<bool> hit(n, false);
    for (uint32_t id : ids) hit[id] = true;
    std::string yes, no;
    for (uint32_t i = 0; i < n; ++i) {
      std::string& dst = hit[i] ? yes : no;
      if (!dst.empty()) dst += " ";
      dst += tvgop_graph_node_name(graph, i);
    }
    std::printf("reachable from %s at %s: %s\n", args.reach[0].c_str(),
                fmt_time(reach->second).c_str(), yes.c_str());
    std::printf("unreachable: %s\n", no.c_str());
  }
  return kExitOk;
}

// ---- journey ---------------------------------------------------------------

struct JourneyArgs {
  TraceArgs trace;
  std::string from;
  std::string to;
  double start = 0;
};

int cmd_journey(const JourneyArgs& args) {
  GraphPtr g = load_graph(args.trace);
  uint32_t u = find_node(g.get(), args.from);
  uint32_t v = find_node(g.get(), args.to);
  tvgop_journey* raw = nullptr;
  check(tvgop_graph_foremost_journey(g.get(), u, v, args.start, &raw));
  if (!raw) {
    std::printf("none\n");
    return kExitNegative;
  }
  JourneyPtr j(raw);
  for (std::size_t i = 0; i < tvgop_journey_hop_count(j.get()); ++i) {
    uint32_t a = 0, b = 0;
    double dep = 0;
    check(tvgop_journey_hop(j.get(), i, &a, &b, &dep));
    std::printf("hop %zu: %s -> %s @ %s\n", i, tvgop_graph_node_name(g.get(), a),
                tvgop_graph_node_name(g.get(), b), fmt_time(dep).c_str());
  }
  std::printf("arrival: %s\n", fmt_time(tvgop_journey_arrival(j.get())).c_str());
  return kExitOk;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::string config;
  std::string out;
  bool quiet = false;
  bool metrics = false;
};

int cmd_simulate(const SimulateArgs& args) {
  tvgop_sim* raw_sim = nullptr;
  check(tvgop_sim_load(args.config.c_str(), &raw_sim));
  SimPtr sim(raw_sim);

  std::filesystem::path dir = ".";
  if (!args.out.empty()) {
    dir = args.out;
  } else if (const char* cfg_dir = tvgop_sim_output_dir(sim.get())) {
    dir = cfg_dir;
  } else if (const char* env = std::getenv("TVGOP_OUTPUT_DIR"); env && *env) {
    dir = env;
  }

  tvgop_society* raw_society = nullptr;
  check(tvgop_society_build(sim.get(), &raw_society));
  SocietyPtr society(raw_society);
  if (!args.quiet) {
    std::fprintf(stderr, "society: %zu agents, %zu contacts\n",
                 tvgop_society_agent_count(society.get()),
                 tvgop_society_contact_count(society.get()));
  }

  tvgop_trajectory* raw_traj = nullptr;
  check(tvgop_run(society.get(), sim.get(), &raw_traj));
  TrajectoryPtr traj(raw_traj);

  std::vector<std::string> outputs = {(dir / "trajectory.csv").string(),
                                      (dir / "summary.json").string()};
  check(tvgop_trajectory_write_csv(traj.get(), outputs[0].c_str()));
  check(tvgop_trajectory_write_summary(traj.get(), outputs[1].c_str()));
  if (args.metrics) {
    outputs.push_back((dir / "metrics.csv").string());
    check(tvgop_trajectory_write_metrics(traj.get(), outputs.back().c_str()));
  }
  std::vector<const char*> paths;
  for (const auto& p : outputs) paths.push_back(p.c_str());
  std::string manifest = (dir / "manifest.json").string();
  check(tvgop_manifest_write(sim.get(), args.config.c_str(), paths.data(),
                             paths.size(), manifest.c_str()));

  if (!args.quiet) {
    int64_t conv = tvgop_trajectory_converged_at(traj.get());
    std::fprintf(stderr, "events: %zu clusters: %zu converged_at: %s\n",
                 tvgop_trajectory_event_count(traj.get()),
                 tvgop_trajectory_cluster_count(traj.get()),
                 conv < 0 ? "never" : std::to_string(conv).c_str());
    std::fprintf(stderr, "wrote %s\n", dir.string().c_str());
  }
  return kExitOk;
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  uint64_t seed = 0;
  std::string out;
  std::optional<std::size_t> ticks, contacts, horizon, support_nodes;
  std::optional<double> topic_confidence, support_confidence;
  std::string trace;
  bool sampled = false;
};

int cmd_generate(const GenerateArgs& args) {
  std::ostringstream params;
  params.precision(17);
  params << "{";
  bool first = true;
  auto field = [&](const char* key, const std::string& value) {
    params << (first ? "" : ",") << '"' << key << "\":" << value;
    first = false;
  };
  if (args.ticks) field("ticks", std::to_string(*args.ticks));
  if (args.contacts) field("contacts", std::to_string(*args.contacts));
  if (args.horizon) field("horizon", std::to_string(*args.horizon));
  if (args.support_nodes) field("support_nodes", std::to_string(*args.support_nodes));
  if (args.topic_confidence) field("topic_confidence", fmt_time(*args.topic_confidence));
  if (args.support_confidence) field("support_confidence", fmt_time(*args.support_confidence));
  if (!args.trace.empty()) {
    std::string escaped;
    for (char c : args.trace) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    field("trace", "\"" + escaped + "\"");
  }
  if (args.sampled) field("sampled", "true");
  params << "}";

  tvgop_sim* raw_sim = nullptr;
  check(tvgop_sim_from_params(args.kind.c_str(), args.n, args.seed,
                              params.str().c_str(), &raw_sim));
  SimPtr sim(raw_sim);
  tvgop_society* raw_society = nullptr;
  check(tvgop_society_build(sim.get(), &raw_society));
  SocietyPtr society(raw_society);
  check(tvgop_society_export(society.get(), sim.get(), args.out.c_str()));
  std::printf("agents: %zu contacts: %zu\n",
              tvgop_society_agent_count(society.get()),
              tvgop_society_contact_count(society.get()));
  std::printf("wrote %s\n", args.out.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-varying graphs and opinion dynamics"};
  app.set_version_flag("--version", std::string(tvgop_version()));
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Temporal analytics of a contact trace");
  add_trace_options(a, analyze.trace);
  a->add_option("--snapshots", analyze.snapshots_csv, "Write snapshots CSV");
  a->add_option("--reach", analyze.reach, "Reachability set from NODE TIME")
      ->expected(2);

  JourneyArgs journey;
  auto* j = app.add_subcommand("journey", "Foremost journey between two nodes");
  add_trace_options(j, journey.trace);
  j->add_option("from", journey.from, "Source node")->required();
  j->add_option("to", journey.to, "Destination node")->required();
  j->add_option("start", journey.start, "Earliest departure time")->required();

  SimulateArgs simulate;
  auto* s = app.add_subcommand("simulate", "Run opinion dynamics from a config");
  s->add_option("config", simulate.config, "Simulation config (JSON)")->required();
  s->add_option("--out", simulate.out,
                "Output directory (default: config output_dir, "
                "$TVGOP_OUTPUT_DIR, then .)");
  s->add_flag("--quiet", simulate.quiet, "Suppress progress output");
  s->add_flag("--metrics", simulate.metrics, "Also write metrics.csv");

  GenerateArgs generate;
  auto* g = app.add_subcommand("generate", "Emit a synthetic society");
  g->add_option("--kind", generate.kind,
                "complete_static | random_pairwise | ring_static | trace")
      ->required();
  g->add_option("--n", generate.n, "Number of agents");
  g->add_option("--seed", generate.seed, "Random seed");
  g->add_option("--out", generate.out, "Output directory")->required();
  g->add_option("--ticks", generate.ticks, "Sampled ticks for static kinds");
  g->add_option("--contacts", generate.contacts, "random_pairwise contacts");
  g->add_option("--horizon", generate.horizon, "random_pairwise time horizon");
  g->add_option("--support-nodes", generate.support_nodes,
                "Support representations per mind");
  g->add_option("--topic-confidence", generate.topic_confidence);
  g->add_option("--support-confidence", generate.support_confidence);
  g->add_option("--trace", generate.trace, "Contact trace for kind 'trace'");
  g->add_flag("--sampled", generate.sampled,
              "Sample one pair per tick for kind 'trace'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: usage: %s\n", e.what());
    return kExitInput;
  }

  try {
    if (*a) return cmd_analyze(analyze);
    if (*j) return cmd_journey(journey);
    if (*s) return cmd_simulate(simulate);
    if (*g) return cmd_generate(generate);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s: %s\n", tvgop_status_name(f.status),
                 f.message.c_str());
    return kExitInput;
  }
  return kExitInput;
}
