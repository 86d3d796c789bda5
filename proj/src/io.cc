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

#include "tvgop/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "tvgop/error.hpp"
#include "tvgop/metrics.hpp"

namespace tvgop {

using nlohmann::json;
namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorCode::kIo, fmt::format("cannot open '{}'", path.string()));
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    fail(ErrorCode::kIo, fmt::format("short write to '{}'", path.string()));
  }
}

std::string format_time(Time t) {
  return t == kInfinity ? std::string("inf") : fmt::format("{}", t);
}

// ---------------------------------------------------------------------------
// Traces

namespace {

std::optional<double> parse_number(std::string_view token) {
  if (token == "inf" || token == "+inf") return kInfinity;
  double value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

bool plain_token(const std::string& s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](char c) {
    return c == '#' || std::isspace(static_cast<unsigned char>(c));
  });
}

}  // namespace

TimeVaryingGraph read_trace(std::istream& in, const TraceOptions& options,
                            const std::string& source) {
  TimeVaryingGraph graph(options.lifetime.value_or(TimeInterval(0, kInfinity)),
                         options.directed);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto where = [&](const std::string& what) {
      fail(ErrorCode::kParse, fmt::format("{}:{}: {}", source, lineno, what));
    };
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(fields),
                                 std::istream_iterator<std::string>()};
    if (tok.empty()) continue;
    if (tok.size() == 1) {
      graph.ensure_node(tok[0]);
      continue;
    }
    if (tok.size() != 4 && tok.size() != 5) {
      where(fmt::format("expected 'u v t_start t_end [label]', got {} fields",
                        tok.size()));
    }
    auto t1 = parse_number(tok[2]);
    auto t2 = parse_number(tok[3]);
    if (!t1 || *t1 == kInfinity) where(fmt::format("bad t_start '{}'", tok[2]));
    if (!t2) where(fmt::format("bad t_end '{}'", tok[3]));
    try {
      NodeId u = graph.ensure_node(tok[0]);
      NodeId v = graph.ensure_node(tok[1]);
      std::optional<std::string> label;
      if (tok.size() == 5) label = tok[4];
      graph.add_contact(u, v, *t1, *t2, std::move(label));
    } catch (const Error& e) {
      where(e.what());
    }
  }
  return graph;
}

TimeVaryingGraph read_trace_file(const fs::path& path,
                                 const TraceOptions& options) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::kIo, fmt::format("cannot open trace '{}'", path.string()));
  }
  return read_trace(in, options, path.string());
}

void write_trace(const TimeVaryingGraph& graph, std::ostream& out) {
  out << "# u v t_start t_end [label]\n";
  for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
    std::string name = graph.node_name(NodeId{i});
    if (!plain_token(name)) {
      fail(ErrorCode::kInvalidArgument,
           fmt::format("node name '{}' cannot be written to a trace", name));
    }
    out << name << '\n';
  }
  for (const auto& [key, e] : graph.edges()) {
    for (const auto& iv : e.presence.intervals()) {
      out << graph.node_name(key.u) << ' ' << graph.node_name(key.v) << ' '
          << format_time(iv.start()) << ' ' << format_time(iv.end());
      if (e.label && plain_token(*e.label)) out << ' ' << *e.label;
      out << '\n';
    }
  }
}

void write_snapshots_csv(const TimeVaryingGraph& graph, std::ostream& out) {
  out << "index,start,end,edge_count,edges\n";
  auto snaps = snapshots(graph);
  for (std::size_t i = 0; i < snaps.size(); ++i) {
    const Snapshot& s = snaps[i];
    out << i << ',' << format_time(s.when.start()) << ','
        << format_time(s.when.end()) << ',' << s.graph.edges.size() << ',';
    for (std::size_t k = 0; k < s.graph.edges.size(); ++k) {
      if (k) out << ';';
      out << graph.node_name(s.graph.edges[k].u) << '-'
          << graph.node_name(s.graph.edges[k].v);
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// JSON helpers

namespace {

json time_to_json(Time t) { return t == kInfinity ? json("inf") : json(t); }

std::optional<Time> time_from_json(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_null()) return kInfinity;
  if (v.is_string()) return parse_number(v.get<std::string>());
  return std::nullopt;
}

/// Reads typed fields out of one JSON object, collecting every problem
/// instead of stopping at the first.
class FieldReader {
 public:
  FieldReader(const json& obj, std::string prefix,
              std::vector<std::string>& issues)
      : obj_(obj), prefix_(std::move(prefix)), issues_(issues) {}

  bool has(const char* key) const {
    return obj_.is_object() && obj_.contains(key);
  }

  void number(const char* key, double& out) {
    if (!has(key)) return;
    if (obj_[key].is_number()) {
      out = obj_[key].get<double>();
    } else {
      bad(key, "a number");
    }
  }

  template <class Int>
  void count(const char* key, Int& out) {
    if (!has(key)) return;
    if (obj_[key].is_number_unsigned() ||
        (obj_[key].is_number_integer() && obj_[key].get<std::int64_t>() >= 0)) {
      out = static_cast<Int>(obj_[key].get<std::uint64_t>());
    } else {
      bad(key, "a non-negative integer");
    }
  }

  void boolean(const char* key, bool& out) {
    if (!has(key)) return;
    if (obj_[key].is_boolean()) {
      out = obj_[key].get<bool>();
    } else {
      bad(key, "a boolean");
    }
  }

  void text(const char* key, std::string& out) {
    if (!has(key)) return;
    if (obj_[key].is_string()) {
      out = obj_[key].get<std::string>();
    } else {
      bad(key, "a string");
    }
  }

  void interval(const char* key, std::optional<TimeInterval>& out) {
    if (!has(key) || obj_[key].is_null()) return;
    const json& v = obj_[key];
    if (v.is_array() && v.size() == 2) {
      auto a = time_from_json(v[0]);
      auto b = time_from_json(v[1]);
      if (a && b) {
        try {
          out = TimeInterval(*a, *b);
          return;
        } catch (const Error&) {
        }
      }
    }
    bad(key, "a non-empty interval [start, end]");
  }

  void unknown_keys(std::initializer_list<const char*> known) {
    if (!obj_.is_object()) return;
    for (const auto& [key, value] : obj_.items()) {
      bool ok = std::any_of(known.begin(), known.end(),
                            [&](const char* k) { return key == k; });
      if (!ok) issues_.push_back(fmt::format("{}{}: unknown field", prefix_, key));
    }
  }

  void issue(const char* key, const std::string& what) {
    issues_.push_back(fmt::format("{}{}: {}", prefix_, key, what));
  }

 private:
  void bad(const char* key, const char* expected) {
    issue(key, fmt::format("expected {}", expected));
  }

  const json& obj_;
  std::string prefix_;
  std::vector<std::string>& issues_;
};

[[noreturn]] void fail_with(const std::string& head,
                            const std::vector<std::string>& issues) {
  std::string msg = head;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    msg += i ? "; " : ": ";
    msg += issues[i];
  }
  fail(ErrorCode::kInvalidArgument, msg);
}

json parse_json_file(const fs::path& path) {
  std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Minds

MindGraph mind_from_json(const json& doc) {
  std::vector<std::string> issues;
  if (!doc.is_object()) fail(ErrorCode::kParse, "mind document must be an object");
  FieldReader top(doc, "", issues);
  top.unknown_keys({"topics", "nodes", "correlations", "lifetime"});
  std::optional<TimeInterval> lifetime;
  top.interval("lifetime", lifetime);
  if (!issues.empty()) fail_with("invalid mind", issues);

  MindGraph mind(lifetime.value_or(TimeInterval(0, kInfinity)));
  try {
    for (const json& t : doc.value("topics", json::array())) {
      Proposition p{t.at("id").get<std::string>(), std::nullopt, std::nullopt};
      if (t.contains("text") && !t["text"].is_null()) {
        p.text = t["text"].get<std::string>();
      }
      if (t.contains("kind_tag") && !t["kind_tag"].is_null()) {
        p.kind_tag = parse_proposition_kind(t["kind_tag"].get<std::string>());
        if (!p.kind_tag) {
          fail(ErrorCode::kParse, fmt::format("topic '{}': bad kind_tag",
                                              p.topic_id));
        }
      }
      mind.add_topic(std::move(p));
    }
    for (const json& nd : doc.value("nodes", json::array())) {
      EpistemicRep rep;
      rep.topic_id = nd.at("topic").get<std::string>();
      rep.truth_objective = nd.at("T_o").get<double>();
      rep.truth_subjective = nd.at("T_s").get<double>();
      rep.confidence = nd.at("d_c").get<double>();
      if (nd.contains("designated_kind") && !nd["designated_kind"].is_null()) {
        rep.designated_kind =
            parse_rep_kind(nd["designated_kind"].get<std::string>());
        if (!rep.designated_kind) {
          fail(ErrorCode::kParse, fmt::format("node for topic '{}': bad "
                                              "designated_kind", rep.topic_id));
        }
      }
      std::optional<std::string> label;
      if (nd.contains("id")) label = nd["id"].get<std::string>();
      mind.add_rep(std::move(rep), std::move(label));
    }
    for (const json& c : doc.value("correlations", json::array())) {
      auto name = [&](const char* key) {
        std::string n = c.at(key).get<std::string>();
        auto id = mind.graph().find_node(n);
        if (!id) {
          fail(ErrorCode::kNotFound,
               fmt::format("correlation names unknown node '{}'", n));
        }
        return *id;
      };
      auto t1 = time_from_json(c.at("t1"));
      auto t2 = time_from_json(c.contains("t2") ? c["t2"] : json());
      if (!t1 || !t2) fail(ErrorCode::kParse, "correlation times must be numbers");
      mind.correlate(name("u"), name("v"), *t1, *t2);
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, fmt::format("invalid mind: {}", e.what()));
  }
  return mind;
}

json mind_to_json(const MindGraph& mind) {
  json topics = json::array();
  for (const auto& [id, p] : mind.topics()) {
    json t = {{"id", id}};
    if (p.text) t["text"] = *p.text;
    if (p.kind_tag) t["kind_tag"] = proposition_kind_name(*p.kind_tag);
    topics.push_back(std::move(t));
  }
  json nodes = json::array();
  const TimeVaryingGraph& g = mind.graph();
  for (std::uint32_t i = 0; i < g.node_count(); ++i) {
    const EpistemicRep& r = mind.rep(NodeId{i});
    json nd = {{"id", g.node_name(NodeId{i})},
               {"topic", r.topic_id},
               {"T_o", r.truth_objective},
               {"T_s", r.truth_subjective},
               {"d_c", r.confidence}};
    if (r.designated_kind) nd["designated_kind"] = rep_kind_name(*r.designated_kind);
    nodes.push_back(std::move(nd));
  }
  json correlations = json::array();
  for (const auto& [key, e] : g.edges()) {
    for (const auto& iv : e.presence.intervals()) {
      correlations.push_back({{"u", g.node_name(key.u)},
                              {"v", g.node_name(key.v)},
                              {"t1", time_to_json(iv.start())},
                              {"t2", time_to_json(iv.end())}});
    }
  }
  return {{"topics", topics},
          {"nodes", nodes},
          {"correlations", correlations},
          {"lifetime",
           {time_to_json(g.lifetime().start()), time_to_json(g.lifetime().end())}}};
}

MindGraph read_mind_file(const fs::path& path) {
  if (!fs::exists(path)) {
    fail(ErrorCode::kIo, fmt::format("mind file '{}' not found", path.string()));
  }
  try {
    return mind_from_json(parse_json_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    fail(e.code(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

// ---------------------------------------------------------------------------
// Simulation configs

SimulationSpec simulation_spec_from_json(const json& doc,
                                         const fs::path& base_dir) {
  std::vector<std::string> issues;
  if (!doc.is_object()) {
    fail(ErrorCode::kInvalidArgument, "config must be a JSON object");
  }
  SimulationSpec spec;
  spec.base_dir = base_dir;
  SimConfig& c = spec.sim;

  FieldReader top(doc, "", issues);
  top.unknown_keys({"topic", "mode", "eps", "eps_max", "k", "activation_window",
                    "mu", "delta_plus", "delta_minus", "seed", "max_events",
                    "convergence_tol", "convergence_window", "cluster_gap",
                    "output_dir", "society"});
  top.text("topic", c.topic_id);
  std::string mode = "classic";
  top.text("mode", mode);
  if (mode == "classic") {
    c.mode = Mode::kClassic;
  } else if (mode == "cognitive") {
    c.mode = Mode::kCognitive;
  } else {
    top.issue("mode", fmt::format("expected 'classic' or 'cognitive', got '{}'",
                                  mode));
  }
  top.number("eps", c.eps);
  top.number("eps_max", c.eps_max);
  top.number("k", c.k);
  top.interval("activation_window", c.activation_window);
  top.number("mu", c.mu);
  top.number("delta_plus", c.delta_plus);
  top.number("delta_minus", c.delta_minus);
  top.count("seed", c.seed);
  top.count("max_events", c.max_events);
  top.number("convergence_tol", c.convergence_tol);
  top.count("convergence_window", c.convergence_window);
  top.number("cluster_gap", c.cluster_gap);
  if (top.has("output_dir")) {
    std::string dir;
    top.text("output_dir", dir);
    if (!dir.empty()) spec.output_dir = dir;
  }
  for (const auto& v : c.violations()) issues.push_back(v);

  SocietySpec& s = spec.society;
  s.params.topic_id = c.topic_id;
  s.params.ticks = c.max_events;
  if (!doc.contains("society") || !doc["society"].is_object()) {
    issues.emplace_back("society: required object is missing");
  } else {
    const json& so = doc["society"];
    FieldReader r(so, "society.", issues);
    r.unknown_keys({"kind", "n", "ticks", "contacts", "horizon",
                    "support_nodes", "topic_confidence", "support_confidence",
                    "trace", "lifetime", "directed", "sampled", "minds"});
    std::string kind;
    r.text("kind", kind);
    if (auto k = parse_society_kind(kind)) {
      s.kind = *k;
    } else {
      r.issue("kind", fmt::format("unknown society kind '{}'", kind));
    }
    r.count("n", s.n);
    r.count("ticks", s.params.ticks);
    r.count("contacts", s.params.contacts);
    r.count("horizon", s.params.horizon);
    r.count("support_nodes", s.params.support_nodes);
    r.number("topic_confidence", s.params.topic_confidence);
    r.number("support_confidence", s.params.support_confidence);
    r.boolean("directed", s.directed);
    r.boolean("sampled", s.params.sampled);
    r.interval("lifetime", s.trace_lifetime);
    if (r.has("trace")) {
      std::string trace;
      r.text("trace", trace);
      if (!trace.empty()) s.trace_path = trace;
    }
    if (r.has("minds")) {
      if (so["minds"].is_object()) {
        for (const auto& [name, path] : so["minds"].items()) {
          if (path.is_string()) {
            s.mind_paths[name] = path.get<std::string>();
          } else {
            r.issue("minds", fmt::format("entry '{}' must be a path", name));
          }
        }
      } else {
        r.issue("minds", "expected an object mapping agent names to paths");
      }
    }
    if (!(s.params.topic_confidence >= 0 && s.params.topic_confidence <= 1)) {
      r.issue("topic_confidence", "must lie in [0, 1]");
    }
    if (!(s.params.support_confidence >= 0 && s.params.support_confidence <= 1)) {
      r.issue("support_confidence", "must lie in [0, 1]");
    }
    if (s.kind == SocietyKind::kTrace) {
      if (!s.trace_path) r.issue("trace", "required for kind 'trace'");
    } else if (s.n < 2) {
      r.issue("n", fmt::format("must be >= 2, got {}", s.n));
    }
    if ((s.kind == SocietyKind::kCompleteStatic ||
         s.kind == SocietyKind::kRingStatic || s.params.sampled) &&
        s.params.ticks == 0) {
      r.issue("ticks", "must be >= 1");
    }
  }
  if (!issues.empty()) fail_with("invalid config", issues);
  return spec;
}

SimulationSpec read_simulation_spec(const fs::path& path) {
  json doc = parse_json_file(path);
  return simulation_spec_from_json(doc, path.parent_path());
}

json simulation_spec_to_json(const SimulationSpec& spec) {
  const SimConfig& c = spec.sim;
  const SocietySpec& s = spec.society;
  json doc = {
      {"topic", c.topic_id},
      {"mode", c.mode == Mode::kClassic ? "classic" : "cognitive"},
      {"eps", c.eps},
      {"eps_max", c.eps_max},
      {"k", c.k},
      {"mu", c.mu},
      {"delta_plus", c.delta_plus},
      {"delta_minus", c.delta_minus},
      {"seed", c.seed},
      {"max_events", c.max_events},
      {"convergence_tol", c.convergence_tol},
      {"convergence_window", c.convergence_window},
      {"cluster_gap", c.cluster_gap},
  };
  if (c.activation_window) {
    doc["activation_window"] = {time_to_json(c.activation_window->start()),
                                time_to_json(c.activation_window->end())};
  }
  if (spec.output_dir) doc["output_dir"] = *spec.output_dir;
  json so = {{"kind", society_kind_name(s.kind)},
             {"ticks", s.params.ticks},
             {"support_nodes", s.params.support_nodes},
             {"topic_confidence", s.params.topic_confidence},
             {"support_confidence", s.params.support_confidence}};
  if (s.kind != SocietyKind::kTrace) so["n"] = s.n;
  if (s.params.contacts) so["contacts"] = s.params.contacts;
  if (s.params.horizon) so["horizon"] = s.params.horizon;
  if (s.trace_path) so["trace"] = s.trace_path->generic_string();
  if (s.trace_lifetime) {
    so["lifetime"] = {time_to_json(s.trace_lifetime->start()),
                      time_to_json(s.trace_lifetime->end())};
  }
  if (s.directed) so["directed"] = true;
  if (s.params.sampled) so["sampled"] = true;
  if (!s.mind_paths.empty()) {
    json minds = json::object();
    for (const auto& [name, path] : s.mind_paths) {
      minds[name] = path.generic_string();
    }
    so["minds"] = minds;
  }
  doc["society"] = so;
  return doc;
}

fs::path resolve(const SimulationSpec& spec, const fs::path& p) {
  return p.is_absolute() ? p : spec.base_dir / p;
}

std::vector<fs::path> input_files(const SimulationSpec& spec) {
  std::vector<fs::path> out;
  if (spec.society.kind != SocietyKind::kTrace) return out;
  if (spec.society.trace_path) out.push_back(resolve(spec, *spec.society.trace_path));
  for (const auto& [name, path] : spec.society.mind_paths) {
    out.push_back(resolve(spec, path));
  }
  return out;
}

Society build_society(const SimulationSpec& spec) {
  const SocietySpec& s = spec.society;
  SocietyParams params = s.params;
  params.topic_id = spec.sim.topic_id;
  if (s.kind == SocietyKind::kTrace) {
    params.trace = read_trace_file(resolve(spec, *s.trace_path),
                                   TraceOptions{s.directed, s.trace_lifetime});
    for (const auto& [name, path] : s.mind_paths) {
      params.minds.emplace(name, read_mind_file(resolve(spec, path)));
    }
  }
  return generate_society(s.kind, s.n, params, spec.sim.seed);
}

// ---------------------------------------------------------------------------
// Outputs

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "event,time,agent_i,agent_j,x_i_pre,x_j_pre,x_i_post,x_j_post,"
         "eps_i,eps_j,updated_i,updated_j\n";
  for (const EventRecord& e : traj.events) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", e.index,
                       format_time(e.time), traj.agent_names[e.i.index],
                       traj.agent_names[e.j.index], e.x_i_pre, e.x_j_pre,
                       e.x_i_post, e.x_j_post, e.eps_i, e.eps_j,
                       e.updated_i ? 1 : 0, e.updated_j ? 1 : 0);
  }
}

json summary_json(const Trajectory& traj, const SimConfig& config) {
  json doc;
  doc["agents"] = traj.agent_names;
  doc["final_opinions"] = traj.final_opinions;
  doc["final_confidences"] = traj.final_confidences;
  doc["events"] = traj.events.size();
  doc["converged_at"] =
      traj.converged_at ? json(*traj.converged_at) : json(nullptr);
  if (!traj.final_opinions.empty()) {
    Spread before = spread(traj.initial_opinions);
    Spread after = spread(traj.final_opinions);
    doc["initial_mean"] = before.mean;
    doc["spread"] = {{"min", after.min},
                     {"max", after.max},
                     {"mean", after.mean},
                     {"variance", after.variance}};
    ClusterReport cl = clusters(traj.final_opinions, config.cluster_gap);
    doc["clusters"] = {{"gap", config.cluster_gap},
                       {"count", cl.count},
                       {"centroids", cl.centroids},
                       {"boundaries", cl.boundaries}};
  }
  return doc;
}

void write_metrics_csv(const Trajectory& traj, double cluster_gap,
                       std::ostream& out) {
  out << "time,min,max,mean,variance,clusters\n";
  std::vector<double> x = traj.initial_opinions;
  auto emit = [&](Time t) {
    Spread s = spread(x);
    out << fmt::format("{},{},{},{},{},{}\n", format_time(t), s.min, s.max,
                       s.mean, s.variance, clusters(x, cluster_gap).count);
  };
  if (x.empty()) return;
  for (std::size_t k = 0; k < traj.events.size(); ++k) {
    const EventRecord& e = traj.events[k];
    x[e.i.index] = e.x_i_post;
    x[e.j.index] = e.x_j_post;
    if (k + 1 == traj.events.size() || traj.events[k + 1].time != e.time) {
      emit(e.time);
    }
  }
}

void export_society(const Society& society, const SimulationSpec& spec,
                    const fs::path& dir) {
  std::ostringstream trace;
  write_trace(society.contacts, trace);
  write_file(dir / "society.trace", trace.str());

  SimulationSpec out = spec;
  out.base_dir = dir;
  out.output_dir.reset();
  SocietySpec& s = out.society;
  s.kind = SocietyKind::kTrace;
  s.n = 0;
  s.params.contacts = 0;
  s.params.horizon = 0;
  s.trace_path = "society.trace";
  s.trace_lifetime = society.contacts.lifetime();
  s.directed = society.contacts.directed();
  s.params.sampled = society.sampling.has_value();
  if (society.sampling) s.params.ticks = society.sampling->ticks;
  s.mind_paths.clear();
  for (const Agent& agent : society.agents) {
    if (!plain_token(agent.name) || agent.name.find('/') != std::string::npos) {
      fail(ErrorCode::kInvalidArgument,
           fmt::format("agent name '{}' cannot be used as a file name",
                       agent.name));
    }
    fs::path rel = fs::path("minds") / (agent.name + ".json");
    write_file(dir / rel, mind_to_json(agent.mind).dump(2) + "\n");
    s.mind_paths[agent.name] = rel;
  }
  write_file(dir / "config.json", simulation_spec_to_json(out).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Manifests

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) !=
      1) {
    fail(ErrorCode::kIo, "sha256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

std::string sha256_file(const fs::path& path) {
  return sha256_hex(read_file(path));
}

FileDigest digest_file(const fs::path& path) {
  return FileDigest{path.generic_string(), sha256_file(path)};
}

json manifest_to_json(const RunManifest& m) {
  auto list = [](const std::vector<FileDigest>& files) {
    json arr = json::array();
    for (const auto& f : files) arr.push_back({{"path", f.path}, {"sha256", f.sha256}});
    return arr;
  };
  return {{"tool_version", m.tool_version},
          {"seed", m.seed},
          {"config", {{"path", m.config.path}, {"sha256", m.config.sha256}}},
          {"inputs", list(m.inputs)},
          {"outputs", list(m.outputs)},
          {"created_at", m.created_at}};
}

RunManifest manifest_from_json(const json& doc) {
  try {
    auto list = [](const json& arr) {
      std::vector<FileDigest> out;
      for (const json& f : arr) {
        out.push_back({f.at("path").get<std::string>(),
                       f.at("sha256").get<std::string>()});
      }
      return out;
    };
    RunManifest m;
    m.tool_version = doc.at("tool_version").get<std::string>();
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.config = {doc.at("config").at("path").get<std::string>(),
                doc.at("config").at("sha256").get<std::string>()};
    m.inputs = list(doc.at("inputs"));
    m.outputs = list(doc.at("outputs"));
    m.created_at = doc.value("created_at", "");
    return m;
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, fmt::format("invalid manifest: {}", e.what()));
  }
}

std::vector<std::string> verify_manifest(const RunManifest& m) {
  std::vector<std::string> bad;
  auto check = [&](const FileDigest& f) {
    std::error_code ec;
    if (!fs::exists(f.path, ec) || sha256_file(f.path) != f.sha256) {
      bad.push_back(f.path);
    }
  };
  check(m.config);
  for (const auto& f : m.inputs) check(f);
  for (const auto& f : m.outputs) check(f);
  return bad;
}

}  // namespace tvgop
