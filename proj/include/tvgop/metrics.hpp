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

#ifndef TVGOP_METRICS_HPP_
#define TVGOP_METRICS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace tvgop {

inline constexpr double kDefaultClusterGap = 0.01;

struct ClusterReport {
  std::size_t count = 0;
  // Midpoints between the last member of a cluster and the first of the next.
  std::vector<double> boundaries;
  // Indices into the input sequence, ascending within each cluster.
  std::vector<std::vector<std::size_t>> members;
  std::vector<double> centroids;
};

/// Gap-based 1-D clustering: a new cluster starts wherever two consecutive
/// sorted values differ by more than `gap`.
ClusterReport clusters(std::span<const double> values,
                       double gap = kDefaultClusterGap);

struct Spread {
  double min = 0;
  double max = 0;
  double mean = 0;
  double variance = 0;  // population convention
};

Spread spread(std::span<const double> values);

/// Opinion moves of one processed event; `moved` holds |delta x| for every
/// agent whose update was accepted.
struct EventMoves {
  std::vector<double> moved;
};

/// True iff the last `window_len` events each moved every accepted opinion by
/// less than `tol`.
bool converged(std::span<const EventMoves> events, double tol,
               std::size_t window_len);

}  // namespace tvgop

#endif  // TVGOP_METRICS_HPP_
