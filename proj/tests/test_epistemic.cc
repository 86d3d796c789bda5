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

#include <random>

#include "doctest.h"
#include "tvgop/epistemic.hpp"
#include "tvgop/error.hpp"

using namespace tvgop;

namespace {

EpistemicRep rep(const std::string& topic, double to, double ts, double dc) {
  return EpistemicRep{topic, to, ts, dc, std::nullopt};
}

MindGraph star(const std::vector<double>& confidences) {
  MindGraph m;
  auto hub = m.add_rep(rep("p", 0, 0.5, confidences.at(0)));
  for (std::size_t i = 1; i < confidences.size(); ++i) {
    auto n = m.add_rep(rep("s" + std::to_string(i), 0.5, 0.5, confidences[i]));
    m.correlate(hub, n, 0, kInfinity);
  }
  return m;
}

std::set<NodeId> all_nodes(const MindGraph& m) {
  std::set<NodeId> out;
  for (std::uint32_t i = 0; i < m.size(); ++i) out.insert(NodeId{i});
  return out;
}

}  // namespace

TEST_CASE("classify fixtures") {
  auto k = classify(rep("p", 0.7, 0.7, 1));
  CHECK(k.knowledge);
  CHECK(k.belief);
  CHECK(k.opinion);
  CHECK(k.primary == RepKind::kKnowledge);

  auto o = classify(rep("p", 0, 0.4, 1));
  CHECK_FALSE(o.knowledge);
  CHECK_FALSE(o.belief);
  CHECK(o.opinion);
  CHECK(o.primary == RepKind::kOpinion);

  auto u = classify(rep("p", 1, 0.2, 1));
  CHECK_FALSE(u.knowledge);
  CHECK_FALSE(u.belief);
  CHECK_FALSE(u.opinion);
  CHECK_FALSE(u.primary.has_value());

  auto b = classify(rep("p", 0.5, 0.2, 1));
  CHECK(b.primary == RepKind::kBelief);

  CHECK(classify(rep("p", 0.5, 0.5001, 0), 0.001).knowledge);
  CHECK_FALSE(classify(rep("p", 0.5, 0.5001, 0)).knowledge);
  CHECK_THROWS_AS(classify(rep("p", 0.5, 0.5, 0), -0.1), Error);
  CHECK_THROWS_AS(classify(rep("p", 1.5, 0.5, 0)), Error);
}

TEST_CASE("belief implies opinion on a fine grid") {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      auto f = classify(rep("p", i / 20.0, j / 20.0, 0));
      if (f.belief) CHECK(f.opinion);
    }
  }
}

TEST_CASE("mind graph bookkeeping") {
  MindGraph m;
  m.add_topic(Proposition{"p", "tax cuts help", PropositionKind::kEvaluative});
  CHECK_THROWS_AS(
      m.add_topic(Proposition{"p", std::nullopt, std::nullopt}), Error);
  auto p = m.add_rep(rep("p", 0, 0.3, 0.2));
  auto q = m.add_rep(rep("q", 0.5, 0.5, 0.9), "q-label");
  CHECK(m.topic("q") != nullptr);
  CHECK(m.node_for("q") == q);
  CHECK(m.graph().node_name(q) == "q-label");
  CHECK(m.rep(p).truth_subjective == 0.3);
  CHECK_THROWS_AS(m.add_rep(rep("p", 0, 0, 0)), Error);
  CHECK_THROWS_AS(m.add_rep(rep("r", 0, 2, 0)), Error);
  try {
    m.node_for("zz");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotFound);
  }
}

TEST_CASE("activate") {
  SUBCASE("isolated topic") {
    MindGraph m;
    auto p = m.add_rep(rep("p", 0, 0.5, 0));
    m.add_rep(rep("q", 0, 0.5, 0));
    auto got = activate(m, ExternalEvent{"p", 0, std::nullopt},
                        TimeInterval(0, 10));
    CHECK(got == std::set<NodeId>{p});
  }
  SUBCASE("chain within the window") {
    MindGraph m;
    auto p = m.add_rep(rep("p", 0, 0.5, 0));
    auto b = m.add_rep(rep("b", 0, 0.5, 0));
    auto c = m.add_rep(rep("c", 0, 0.5, 0));
    m.correlate(p, b, 1, 3);
    m.correlate(b, c, 2, 4);
    ExternalEvent ev{"p", 0, std::nullopt};
    CHECK(activate(m, ev, TimeInterval(0, 5)) == std::set<NodeId>{p, b, c});
  }
  SUBCASE("expired correlation") {
    MindGraph m;
    auto p = m.add_rep(rep("p", 0, 0.5, 0));
    auto b = m.add_rep(rep("b", 0, 0.5, 0));
    auto c = m.add_rep(rep("c", 0, 0.5, 0));
    m.correlate(p, b, 1, 3);
    m.correlate(b, c, 0, 1);
    ExternalEvent ev{"p", 1, std::nullopt};
    CHECK(activate(m, ev, TimeInterval(1, 5)) == std::set<NodeId>{p, b});
  }
  SUBCASE("unknown topic") {
    MindGraph m;
    CHECK_THROWS_AS(activate(m, ExternalEvent{"p", 0, std::nullopt},
                             TimeInterval(0, 1)),
                    Error);
  }
}

TEST_CASE("activation is monotone in the window") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> time(0, 15);
  for (int round = 0; round < 200; ++round) {
    MindGraph m;
    for (int i = 0; i < 5; ++i) m.add_rep(rep("t" + std::to_string(i), 0, 0.5, 0));
    for (int e = 0; e < 6; ++e) {
      std::uint32_t u = rng() % 5, v = rng() % 5;
      if (u == v) continue;
      int a = time(rng);
      m.correlate(NodeId{u}, NodeId{v}, a, a + 1 + rng() % 4);
    }
    ExternalEvent ev{"t0", 0, std::nullopt};
    auto small = activate(m, ev, TimeInterval(4, 9));
    auto big = activate(m, ev, TimeInterval(2, 14));
    CHECK(small.contains(NodeId{0}));
    for (auto id : small) CHECK(big.contains(id));
  }
}

TEST_CASE("resistance fixtures") {
  auto one = star({1.0});
  CHECK(resistance(one, {NodeId{0}}, 3) == doctest::Approx(0.25));
  auto two = star({0.5, 1.0});
  CHECK(resistance(two, all_nodes(two), 3) == doctest::Approx(0.3));
  auto three = star({0.2, 0.4, 0.9});
  CHECK(resistance(three, all_nodes(three), 0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(resistance(three, {}, 3), Error);
  CHECK_THROWS_AS(resistance(three, {NodeId{0}}, -1), Error);
}

TEST_CASE("resistance properties") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 1 + rng() % 5;
    std::vector<double> dc(n);
    for (auto& d : dc) d = unit(rng);
    double k = unit(rng) * 5;
    auto m = star(dc);
    auto nodes = all_nodes(m);
    double r = resistance(m, nodes, k);
    CHECK(r >= 0);
    CHECK(r <= 1);
    CHECK(resistance(m, nodes, k + 0.5) <= r);

    std::size_t pick = rng() % n;
    if (dc[pick] < 0.99) {
      auto raised = dc;
      raised[pick] = std::min(1.0, dc[pick] + 0.01);
      CHECK(resistance(star(raised), nodes, k) > r);
    }

    double mean = 0;
    for (double d : dc) mean += d;
    mean /= static_cast<double>(n);
    auto grown = dc;
    grown.push_back(mean + (1 - mean) * unit(rng));
    auto mg = star(grown);
    CHECK(resistance(mg, all_nodes(mg), k) >= r - 1e-12);

    ExternalEvent ev{"p", 0, std::nullopt};
    double eps = tolerance_of(m, ev, 0.3, k, TimeInterval(0, kInfinity));
    CHECK(eps >= 0);
    CHECK(eps <= 0.3);
  }
}

TEST_CASE("tolerance fixtures") {
  ExternalEvent ev{"p", 0, std::nullopt};
  TimeInterval all(0, kInfinity);
  CHECK(tolerance_of(star({0, 0, 0}), ev, 0.2, 3, all) == 0.2);
  CHECK(tolerance_of(star({1, 1}), ev, 0.2, 0, all) == 0);
  CHECK(tolerance_of(star({1}), ev, 0.4, 3, all) == doctest::Approx(0.3));
  CHECK_THROWS_AS(tolerance_of(star({1}), ev, 1.5, 3, all), Error);
}

TEST_CASE("confidence update") {
  auto r = rep("p", 0, 0.5, 0.5);
  CHECK(confidence_update(r, true, 0.2, 0).confidence == doctest::Approx(0.6));
  CHECK(confidence_update(rep("p", 0, 0.5, 1), true, 0.7, 0).confidence == 1);
  CHECK(confidence_update(r, false, 0.2, 0).confidence == 0.5);
  CHECK(confidence_update(r, false, 0.2, 0.5).confidence == doctest::Approx(0.25));
  CHECK_THROWS_AS(confidence_update(r, true, 1.2, 0), Error);

  auto cur = rep("p", 0, 0.5, 0.1);
  for (int i = 0; i < 200; ++i) {
    auto next = confidence_update(cur, true, 0.1, 0);
    CHECK(next.confidence >= cur.confidence);
    CHECK(next.confidence <= 1);
    cur = next;
  }
  CHECK(cur.confidence == doctest::Approx(1).epsilon(1e-6));
}

TEST_CASE("kind names round-trip") {
  for (auto k : {RepKind::kKnowledge, RepKind::kBelief, RepKind::kOpinion}) {
    CHECK(parse_rep_kind(rep_kind_name(k)) == k);
  }
  for (auto k : {PropositionKind::kFactual, PropositionKind::kEvaluative}) {
    CHECK(parse_proposition_kind(proposition_kind_name(k)) == k);
  }
  CHECK_FALSE(parse_rep_kind("hunch").has_value());
}
