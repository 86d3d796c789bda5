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

#include "tvgop/interval.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "tvgop/error.hpp"

namespace tvgop {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kNotFound:
      return "not_found";
    case ErrorCode::kUnavailable:
      return "unavailable";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kFrozen:
      return "frozen";
  }
  return "unknown";
}

TimeInterval::TimeInterval(Time start, Time end) : start_(start), end_(end) {
  if (std::isnan(start) || std::isnan(end) || !std::isfinite(start)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("interval [{}, {}) has a non-finite start", start, end));
  }
  if (start < 0) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("interval [{}, {}) starts before time 0", start, end));
  }
  if (!(start < end)) {
    fail(ErrorCode::kInvalidArgument,
         fmt::format("interval [{}, {}) is empty", start, end));
  }
}

IntervalSet::IntervalSet(std::span<const TimeInterval> pieces) {
  for (const auto& p : pieces) insert(p);
}

void IntervalSet::insert(const TimeInterval& piece) {
  // First piece whose end reaches piece.start (touching counts).
  auto first = std::lower_bound(
      pieces_.begin(), pieces_.end(), piece.start(),
      [](const TimeInterval& iv, Time t) { return iv.end() < t; });
  auto last = first;
  Time start = piece.start();
  Time end = piece.end();
  while (last != pieces_.end() && last->start() <= end) {
    start = std::min(start, last->start());
    end = std::max(end, last->end());
    ++last;
  }
  auto pos = pieces_.erase(first, last);
  pieces_.insert(pos, TimeInterval(start, end));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  IntervalSet out = *this;
  for (const auto& p : other.pieces_) out.insert(p);
  return out;
}

std::optional<TimeInterval> IntervalSet::find(Time t) const noexcept {
  auto it = std::upper_bound(
      pieces_.begin(), pieces_.end(), t,
      [](Time v, const TimeInterval& iv) { return v < iv.start(); });
  if (it == pieces_.begin()) return std::nullopt;
  --it;
  if (it->contains(t)) return *it;
  return std::nullopt;
}

bool IntervalSet::contains(Time t) const noexcept {
  return find(t).has_value();
}

std::optional<Time> IntervalSet::earliest_at_or_after(Time t) const noexcept {
  auto it = std::lower_bound(
      pieces_.begin(), pieces_.end(), t,
      [](const TimeInterval& iv, Time v) { return iv.end() <= v; });
  if (it == pieces_.end()) return std::nullopt;
  return std::max(t, it->start());
}

}  // namespace tvgop
