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

#ifndef TVGOP_INTERVAL_HPP_
#define TVGOP_INTERVAL_HPP_

#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace tvgop {

// Abstract time units. +infinity is legal only as an interval end.
using Time = double;
using Duration = double;

inline constexpr Time kInfinity = std::numeric_limits<Time>::infinity();

/// Half-open interval [start, end). Construction rejects empty, negative
/// or non-finite-start intervals, so every live instance is non-empty.
class TimeInterval {
 public:
  TimeInterval(Time start, Time end);

  Time start() const noexcept { return start_; }
  Time end() const noexcept { return end_; }
  bool bounded() const noexcept { return end_ != kInfinity; }

  bool contains(Time t) const noexcept { return start_ <= t && t < end_; }
  bool contains(const TimeInterval& other) const noexcept {
    return start_ <= other.start_ && other.end_ <= end_;
  }

  bool operator==(const TimeInterval&) const = default;

 private:
  Time start_;
  Time end_;
};

/// Normalized union of half-open intervals: sorted, disjoint and with no two
/// members touching. Adjacent pieces such as [1,2) and [2,4) are merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::span<const TimeInterval> pieces);

  void insert(const TimeInterval& piece);
  IntervalSet unite(const IntervalSet& other) const;

  bool contains(Time t) const noexcept;
  // Piece containing t, if any.
  std::optional<TimeInterval> find(Time t) const noexcept;
  // Earliest instant >= t that belongs to the set.
  std::optional<Time> earliest_at_or_after(Time t) const noexcept;

  bool empty() const noexcept { return pieces_.empty(); }
  std::size_t size() const noexcept { return pieces_.size(); }
  const std::vector<TimeInterval>& intervals() const noexcept {
    return pieces_;
  }

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<TimeInterval> pieces_;
};

}  // namespace tvgop

#endif  // TVGOP_INTERVAL_HPP_
