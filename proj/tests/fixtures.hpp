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

// Builders shared by the test binaries.

#ifndef TVGOP_TESTS_FIXTURES_HPP_
#define TVGOP_TESTS_FIXTURES_HPP_

#include <string>

#include "oracle.hpp"
#include "tvgop/tvg.hpp"

namespace fixtures {

inline std::string node_name(std::uint32_t i) { return "n" + std::to_string(i); }

inline tvgop::TimeVaryingGraph to_tvg(const oracle::RawTvg& raw) {
  tvgop::TimeVaryingGraph g(tvgop::TimeInterval(0, raw.life_end), raw.directed);
  for (std::uint32_t i = 0; i < raw.nodes; ++i) g.add_node(node_name(i));
  for (const auto& c : raw.contacts) {
    g.add_contact(tvgop::NodeId{c.u}, tvgop::NodeId{c.v}, c.t1, c.t2);
  }
  return g;
}

// (b,c) present over [0,1), (a,b) over [2,3).
inline tvgop::TimeVaryingGraph counterexample(bool directed = false) {
  tvgop::TimeVaryingGraph g(tvgop::TimeInterval(0, 10), directed);
  auto a = g.add_node("a");
  auto b = g.add_node("b");
  auto c = g.add_node("c");
  g.add_contact(b, c, 0, 1);
  g.add_contact(a, b, 2, 3);
  return g;
}

}  // namespace fixtures

#endif  // TVGOP_TESTS_FIXTURES_HPP_
