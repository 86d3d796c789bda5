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

#include "tvgop/metrics.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "tvgop/error.hpp"

namespace tvgop {

ClusterReport clusters(std::span<const double> values, double gap) {
  if (!(gap > 0)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("cluster gap must be > 0, got {}", gap));
  }
  ClusterReport report;
  if (values.empty()) return report;

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });

  report.members.emplace_back();
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) {
      double lo = values[order[k - 1]];
      double hi = values[order[k]];
      if (hi - lo > gap) {
        report.boundaries.push_back(lo + (hi - lo) / 2);
        report.members.emplace_back();
      }
    }
    report.members.back().push_back(order[k]);
  }
  for (auto& cluster : report.members) {
    double sum = 0;
    for (std::size_t i : cluster) sum += values[i];
    report.centroids.push_back(sum / static_cast<double>(cluster.size()));
    std::sort(cluster.begin(), cluster.end());
  }
  report.count = report.members.size();
  return report;
}

Spread spread(std::span<const double> values) {
  if (values.empty()) {
    fail(ErrorCode::kInvalidArgument, "spread of an empty sequence");
  }
  Spread s;
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.variance = ss / n;
  return s;
}

bool converged(std::span<const EventMoves> events, double tol,
               std::size_t window_len) {
  if (window_len == 0) {
    fail(ErrorCode::kInvalidArgument, "convergence window must be >= 1");
  }
  if (events.size() < window_len) return false;
  auto recent = events.last(window_len);
  return std::all_of(recent.begin(), recent.end(), [&](const EventMoves& e) {
    return std::all_of(e.moved.begin(), e.moved.end(),
                       [&](double d) { return d < tol; });
  });
}

}  // namespace tvgop
