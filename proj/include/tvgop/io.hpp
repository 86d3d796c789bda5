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

#ifndef TVGOP_IO_HPP_
#define TVGOP_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tvgop/dynamics.hpp"
#include "tvgop/epistemic.hpp"
#include "tvgop/tvg.hpp"

namespace tvgop {

inline constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Contact traces
//
// One contact per line: `u v t_start t_end [label]`. `#` starts a comment,
// `inf` is accepted for t_end. A line holding a single token declares an
// isolated node.
// ---------------------------------------------------------------------------

struct TraceOptions {
  bool directed = false;
  std::optional<TimeInterval> lifetime;  // [0, inf) when unset
};

TimeVaryingGraph read_trace(std::istream& in, const TraceOptions& options,
                            const std::string& source = "<input>");
TimeVaryingGraph read_trace_file(const std::filesystem::path& path,
                                 const TraceOptions& options);
void write_trace(const TimeVaryingGraph& graph, std::ostream& out);

std::string format_time(Time t);

// ---------------------------------------------------------------------------
// Mind graphs (JSON)
// ---------------------------------------------------------------------------

MindGraph mind_from_json(const nlohmann::json& doc);
nlohmann::json mind_to_json(const MindGraph& mind);
MindGraph read_mind_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Simulation configs (JSON)
// ---------------------------------------------------------------------------

struct SocietySpec {
  SocietyKind kind = SocietyKind::kCompleteStatic;
  std::size_t n = 0;
  SocietyParams params;  // trace/minds are filled in by build_society
  std::optional<std::filesystem::path> trace_path;
  std::optional<TimeInterval> trace_lifetime;
  bool directed = false;
  std::map<std::string, std::filesystem::path> mind_paths;
};

struct SimulationSpec {
  SimConfig sim;
  SocietySpec society;
  std::optional<std::string> output_dir;
  std::filesystem::path base_dir;  // relative paths resolve against this
};

/// Parses and validates a config document. All violations are collected and
/// reported together in one kInvalidArgument error.
SimulationSpec simulation_spec_from_json(const nlohmann::json& doc,
                                         const std::filesystem::path& base_dir);
SimulationSpec read_simulation_spec(const std::filesystem::path& path);
nlohmann::json simulation_spec_to_json(const SimulationSpec& spec);

std::filesystem::path resolve(const SimulationSpec& spec,
                              const std::filesystem::path& p);

/// Loads referenced trace and mind files and generates the society.
Society build_society(const SimulationSpec& spec);

/// Files read by build_society, in a fixed order.
std::vector<std::filesystem::path> input_files(const SimulationSpec& spec);

// ---------------------------------------------------------------------------
// Run outputs
// ---------------------------------------------------------------------------

void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
nlohmann::json summary_json(const Trajectory& traj, const SimConfig& config);
/// Opinion statistics after the last event at each distinct event time.
void write_metrics_csv(const Trajectory& traj, double cluster_gap,
                       std::ostream& out);
void write_snapshots_csv(const TimeVaryingGraph& graph, std::ostream& out);

/// Writes society.trace, minds/<agent>.json and a trace-kind config.json that
/// reproduces the society when fed back to the simulator.
void export_society(const Society& society, const SimulationSpec& spec,
                    const std::filesystem::path& dir);

// ---------------------------------------------------------------------------
// Run manifests
// ---------------------------------------------------------------------------

struct FileDigest {
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::string tool_version;
  std::uint64_t seed = 0;
  FileDigest config;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  std::string created_at;  // informational, never digested
};

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);
FileDigest digest_file(const std::filesystem::path& path);

nlohmann::json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& doc);
/// Paths whose current digest differs from the recorded one.
std::vector<std::string> verify_manifest(const RunManifest& manifest);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace tvgop

#endif  // TVGOP_IO_HPP_
