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

/*
 * C interface to libtvgop. All objects are opaque handles owned by the
 * caller and released with the matching *_destroy function. Every fallible
 * call returns a tvgop_status; on failure a one-line description is
 * available from tvgop_last_error() until the next failing call on the same
 * thread.
 *
 * Functions that fill caller buffers take (buf, cap, count): *count always
 * receives the full size, and at most cap items are written. Passing a null
 * buffer with cap 0 queries the size.
 */

#ifndef TVGOP_TVGOP_H_
#define TVGOP_TVGOP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define TVGOP_API __declspec(dllexport)
#else
#  define TVGOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tvgop_status {
  TVGOP_OK = 0,
  TVGOP_ERR_INVALID_ARGUMENT = 1,
  TVGOP_ERR_NOT_FOUND = 2,
  TVGOP_ERR_UNAVAILABLE = 3,
  TVGOP_ERR_PARSE = 4,
  TVGOP_ERR_IO = 5,
  TVGOP_ERR_FROZEN = 6,
  TVGOP_ERR_INTERNAL = 7
} tvgop_status;

typedef enum tvgop_date_kind {
  TVGOP_DATES_APPEARANCE = 0,
  TVGOP_DATES_DISAPPEARANCE = 1,
  TVGOP_DATES_COMBINED = 2
} tvgop_date_kind;

typedef struct tvgop_graph tvgop_graph;
typedef struct tvgop_journey tvgop_journey;
typedef struct tvgop_sim tvgop_sim;
typedef struct tvgop_society tvgop_society;
typedef struct tvgop_trajectory tvgop_trajectory;

TVGOP_API const char* tvgop_version(void);
TVGOP_API const char* tvgop_last_error(void);
TVGOP_API const char* tvgop_status_name(tvgop_status status);

/* ---- time-varying graphs ------------------------------------------------ */

/* life_end may be INFINITY. */
TVGOP_API tvgop_status tvgop_graph_create(int directed, double life_start,
                                          double life_end, tvgop_graph** out);
/* Reads a contact trace. has_lifetime = 0 selects [0, inf). */
TVGOP_API tvgop_status tvgop_graph_load_trace(const char* path, int directed,
                                              int has_lifetime,
                                              double life_start,
                                              double life_end,
                                              tvgop_graph** out);
TVGOP_API void tvgop_graph_destroy(tvgop_graph* graph);

TVGOP_API tvgop_status tvgop_graph_add_node(tvgop_graph* graph,
                                            const char* label,
                                            uint32_t* out_id);
TVGOP_API tvgop_status tvgop_graph_find_node(const tvgop_graph* graph,
                                             const char* label,
                                             uint32_t* out_id);
TVGOP_API tvgop_status tvgop_graph_add_contact(tvgop_graph* graph, uint32_t u,
                                               uint32_t v, double t1,
                                               double t2);
TVGOP_API tvgop_status tvgop_graph_set_latency(tvgop_graph* graph, uint32_t u,
                                               uint32_t v, double t1,
                                               double t2, double duration);
TVGOP_API void tvgop_graph_freeze(tvgop_graph* graph);

TVGOP_API size_t tvgop_graph_node_count(const tvgop_graph* graph);
TVGOP_API size_t tvgop_graph_edge_count(const tvgop_graph* graph);
/* Borrowed string, valid while the graph lives. */
TVGOP_API const char* tvgop_graph_node_name(const tvgop_graph* graph,
                                            uint32_t id);
TVGOP_API tvgop_status tvgop_graph_edge_at(const tvgop_graph* graph,
                                           size_t index, uint32_t* u,
                                           uint32_t* v);

TVGOP_API tvgop_status tvgop_graph_presence(const tvgop_graph* graph,
                                            uint32_t u, uint32_t v, double t,
                                            int* out);
TVGOP_API tvgop_status tvgop_graph_latency(const tvgop_graph* graph,
                                           uint32_t u, uint32_t v, double t,
                                           double* out);
/* Available dates as [start, end) pairs flattened into buf. */
TVGOP_API tvgop_status tvgop_graph_available_dates(const tvgop_graph* graph,
                                                   uint32_t u, uint32_t v,
                                                   double* buf, size_t cap,
                                                   size_t* count);
TVGOP_API tvgop_status tvgop_graph_edge_dates(const tvgop_graph* graph,
                                              uint32_t u, uint32_t v,
                                              tvgop_date_kind kind,
                                              double* buf, size_t cap,
                                              size_t* count);
TVGOP_API tvgop_status tvgop_graph_characteristic_dates(
    const tvgop_graph* graph, double* buf, size_t cap, size_t* count);
TVGOP_API tvgop_status tvgop_graph_footprint(const tvgop_graph* graph,
                                             size_t* edge_count,
                                             int* connected);
TVGOP_API size_t tvgop_graph_snapshot_count(const tvgop_graph* graph);
TVGOP_API tvgop_status tvgop_graph_write_snapshots_csv(
    const tvgop_graph* graph, const char* path);

/* ---- journeys ------------------------------------------------------------ */

/* *out is set to NULL (with TVGOP_OK) when no journey exists. */
TVGOP_API tvgop_status tvgop_graph_foremost_journey(const tvgop_graph* graph,
                                                    uint32_t u, uint32_t v,
                                                    double start,
                                                    tvgop_journey** out);
TVGOP_API void tvgop_journey_destroy(tvgop_journey* journey);
TVGOP_API size_t tvgop_journey_hop_count(const tvgop_journey* journey);
TVGOP_API tvgop_status tvgop_journey_hop(const tvgop_journey* journey,
                                         size_t index, uint32_t* from,
                                         uint32_t* to, double* departure);
TVGOP_API double tvgop_journey_arrival(const tvgop_journey* journey);

TVGOP_API tvgop_status tvgop_graph_reachability(const tvgop_graph* graph,
                                                uint32_t u, double start,
                                                uint32_t* buf, size_t cap,
                                                size_t* count);
TVGOP_API tvgop_status tvgop_graph_temporally_connected(
    const tvgop_graph* graph, const uint32_t* nodes, size_t n,
    double window_start, double window_end, int* out);

/* ---- simulation ---------------------------------------------------------- */

/* Loads and validates a simulation config file. All violated fields are
 * listed in the error message. */
TVGOP_API tvgop_status tvgop_sim_load(const char* config_path,
                                      tvgop_sim** out);
/* Builds a config from generation parameters. kind is one of
 * complete_static, random_pairwise, ring_static, trace. params_json is an
 * optional JSON object of society fields (ticks, contacts, support_nodes,
 * trace, ...); may be NULL. */
TVGOP_API tvgop_status tvgop_sim_from_params(const char* kind, size_t n,
                                             uint64_t seed,
                                             const char* params_json,
                                             tvgop_sim** out);
TVGOP_API void tvgop_sim_destroy(tvgop_sim* sim);
TVGOP_API uint64_t tvgop_sim_seed(const tvgop_sim* sim);
/* Borrowed; NULL when the config names no output directory. */
TVGOP_API const char* tvgop_sim_output_dir(const tvgop_sim* sim);

TVGOP_API tvgop_status tvgop_society_build(const tvgop_sim* sim,
                                           tvgop_society** out);
TVGOP_API void tvgop_society_destroy(tvgop_society* society);
TVGOP_API size_t tvgop_society_agent_count(const tvgop_society* society);
TVGOP_API size_t tvgop_society_contact_count(const tvgop_society* society);
/* Writes society.trace, minds/ and config.json into dir. */
TVGOP_API tvgop_status tvgop_society_export(const tvgop_society* society,
                                            const tvgop_sim* sim,
                                            const char* dir);

TVGOP_API tvgop_status tvgop_run(const tvgop_society* society,
                                 const tvgop_sim* sim,
                                 tvgop_trajectory** out);
TVGOP_API void tvgop_trajectory_destroy(tvgop_trajectory* traj);
TVGOP_API size_t tvgop_trajectory_event_count(const tvgop_trajectory* traj);
TVGOP_API size_t tvgop_trajectory_cluster_count(const tvgop_trajectory* traj);
/* Returns -1 when the run never converged. */
TVGOP_API int64_t tvgop_trajectory_converged_at(const tvgop_trajectory* traj);
TVGOP_API tvgop_status tvgop_trajectory_write_csv(const tvgop_trajectory* traj,
                                                  const char* path);
TVGOP_API tvgop_status tvgop_trajectory_write_summary(
    const tvgop_trajectory* traj, const char* path);
TVGOP_API tvgop_status tvgop_trajectory_write_metrics(
    const tvgop_trajectory* traj, const char* path);

/* Records digests of the config, its input files and the given outputs. */
TVGOP_API tvgop_status tvgop_manifest_write(const tvgop_sim* sim,
                                            const char* config_path,
                                            const char* const* outputs,
                                            size_t n_outputs,
                                            const char* path);
/* *ok = 1 when every recorded digest still matches. */
TVGOP_API tvgop_status tvgop_manifest_verify(const char* path, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* TVGOP_TVGOP_H_ */
