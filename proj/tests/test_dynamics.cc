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

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "tvgop/dynamics.hpp"
#include "tvgop/error.hpp"

using namespace tvgop;

namespace {

Agent agent(std::uint32_t id, double x, double dc = 0, std::size_t support = 0,
            double support_dc = 0.5) {
  SocietyParams p;
  p.topic_confidence = dc;
  p.support_nodes = support;
  p.support_confidence = support_dc;
  return Agent{NodeId{id}, std::to_string(id), default_mind(p, x)};
}

Society manual(std::vector<Agent> agents, Time end = 100) {
  Society s{std::move(agents), TimeVaryingGraph(TimeInterval(0, end)),
            std::nullopt};
  for (const auto& a : s.agents) s.contacts.add_node(a.name);
  return s;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("config validation collects every violation") {
  SimConfig c;
  c.validate();
  c.eps = 1.5;
  c.mu = -0.1;
  c.convergence_tol = 0;
  CHECK(c.violations().size() == 3);
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("contact schedule") {
  SUBCASE("appearance dates") {
    auto s = manual({agent(0, 0.1), agent(1, 0.2), agent(2, 0.3), agent(3, 0.4)});
    s.contacts.add_contact(NodeId{1}, NodeId{2}, 0, 5);
    s.contacts.add_contact(NodeId{2}, NodeId{3}, 1, 2);
    auto sched = contact_schedule(s);
    CHECK(sched == std::vector<ScheduledContact>{{0, NodeId{1}, NodeId{2}},
                                                 {1, NodeId{2}, NodeId{3}}});
  }
  SUBCASE("one event per maximal interval") {
    auto s = manual({agent(0, 0.1), agent(1, 0.2)});
    s.contacts.add_contact(NodeId{0}, NodeId{1}, 1, 2);
    s.contacts.add_contact(NodeId{0}, NodeId{1}, 4, 5);
    auto sched = contact_schedule(s);
    REQUIRE(sched.size() == 2);
    CHECK(sched[0].time == 1);
    CHECK(sched[1].time == 4);
  }
  SUBCASE("simultaneous events") {
    std::vector<Agent> a;
    for (std::uint32_t i = 0; i < 6; ++i) a.push_back(agent(i, 0.5));
    auto s = manual(std::move(a));
    s.contacts.add_contact(NodeId{5}, NodeId{2}, 3, 4);
    s.contacts.add_contact(NodeId{1}, NodeId{4}, 3, 4);
    auto sched = contact_schedule(s);
    REQUIRE(sched.size() == 2);
    CHECK(sched[0].first == NodeId{1});
    CHECK(sched[0].second == NodeId{4});
    CHECK(sched[1].first == NodeId{2});
    CHECK(sched[1].second == NodeId{5});
  }
}

TEST_CASE("interact fixtures") {
  SimConfig c;
  c.eps = 0.2;
  c.mu = 0.5;
  SUBCASE("close opinions meet halfway") {
    auto a = agent(0, 0.4), b = agent(1, 0.5);
    auto r = interact(a, b, 0, c);
    CHECK(r.x_i_post == doctest::Approx(0.45));
    CHECK(r.x_j_post == doctest::Approx(0.45));
    CHECK(r.updated_i);
    CHECK(r.updated_j);
    CHECK(a.opinion("p") == r.x_i_post);
  }
  SUBCASE("distant opinions stay") {
    auto a = agent(0, 0.1), b = agent(1, 0.9);
    auto r = interact(a, b, 0, c);
    CHECK(r.x_i_post == 0.1);
    CHECK(r.x_j_post == 0.9);
    CHECK_FALSE(r.updated_i);
  }
  SUBCASE("threshold is strict") {
    auto a = agent(0, 0.25), b = agent(1, 0.75);
    c.eps = 0.5;
    auto r = interact(a, b, 0, c);
    CHECK_FALSE(r.updated_i);
    CHECK_FALSE(r.updated_j);
  }
  SUBCASE("cognitive tolerances are per agent") {
    c.mode = Mode::kCognitive;
    c.eps_max = 0.5;
    c.k = 0;
    c.delta_plus = 0;
    // d_c = 0 gives eps 0.5; d_c = 0.9 gives eps 0.05.
    auto a = agent(0, 0.3, 0.0), b = agent(1, 0.6, 0.9);
    auto r = interact(a, b, 0, c);
    CHECK(r.eps_i == doctest::Approx(0.5));
    CHECK(r.eps_j == doctest::Approx(0.05));
    CHECK(r.x_i_post == doctest::Approx(0.45));
    CHECK(r.x_j_post == 0.6);
    CHECK(r.updated_i);
    CHECK_FALSE(r.updated_j);
  }
  SUBCASE("missing topic") {
    auto a = agent(0, 0.4), b = agent(1, 0.5);
    c.topic_id = "q";
    CHECK_THROWS_AS(interact(a, b, 0, c), Error);
  }
}

TEST_CASE("run fixtures") {
  SimConfig c;
  SUBCASE("no contacts") {
    auto s = manual({agent(0, 0.2), agent(1, 0.7)});
    auto t = run(s, c);
    CHECK(t.events.empty());
    CHECK(t.final_opinions == t.initial_opinions);
  }
  SUBCASE("equal opinions") {
    auto s = manual({agent(0, 0.4, 0.5), agent(1, 0.4, 0.5)});
    s.contacts.add_contact(NodeId{0}, NodeId{1}, 2, 3);
    auto t = run(s, c);
    REQUIRE(t.events.size() == 1);
    CHECK(t.final_opinions == t.initial_opinions);
    CHECK(t.final_confidences[0] == doctest::Approx(0.55));
    CHECK(t.final_confidences[1] == doctest::Approx(0.55));
  }
  SUBCASE("missing topic") {
    auto s = manual({agent(0, 0.2), agent(1, 0.7)});
    c.topic_id = "q";
    CHECK_THROWS_AS(run(s, c), Error);
  }
  SUBCASE("max events caps the run") {
    auto s = generate_society(SocietyKind::kCompleteStatic, 10, {}, 1);
    c.max_events = 50;
    c.convergence_window = 0;
    CHECK(run(s, c).events.size() == 50);
  }
}

TEST_CASE("runs are deterministic") {
  SocietyParams p;
  p.ticks = 2000;
  auto s = generate_society(SocietyKind::kRandomPairwise, 20, p, 9);
  SimConfig c;
  c.eps = 0.3;
  auto t1 = run(s, c);
  auto t2 = run(generate_society(SocietyKind::kRandomPairwise, 20, p, 9), c);
  REQUIRE(t1.events.size() == t2.events.size());
  for (std::size_t i = 0; i < t1.events.size(); ++i) {
    CHECK(t1.events[i].x_i_post == t2.events[i].x_i_post);
    CHECK(t1.events[i].x_j_post == t2.events[i].x_j_post);
  }
  CHECK(t1.final_opinions == t2.final_opinions);
}

TEST_CASE("generated societies") {
  SocietyParams p;
  p.ticks = 5;
  auto ring = generate_society(SocietyKind::kRingStatic, 4, p, 0);
  std::vector<EdgeKey> keys;
  for (const auto& [k, e] : ring.contacts.edges()) keys.push_back(k);
  CHECK(keys == std::vector<EdgeKey>{{NodeId{0}, NodeId{1}},
                                     {NodeId{0}, NodeId{3}},
                                     {NodeId{1}, NodeId{2}},
                                     {NodeId{2}, NodeId{3}}});
  CHECK(contact_schedule(ring).size() == 5);

  auto complete = generate_society(SocietyKind::kCompleteStatic, 5, p, 0);
  CHECK(complete.contacts.edge_count() == 10);

  auto r1 = generate_society(SocietyKind::kRandomPairwise, 8, p, 4);
  auto r2 = generate_society(SocietyKind::kRandomPairwise, 8, p, 4);
  CHECK(contact_schedule(r1) == contact_schedule(r2));
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(r1.agents[i].opinion("p") == r2.agents[i].opinion("p"));
  }

  CHECK_THROWS_AS(generate_society(SocietyKind::kRingStatic, 1, p, 0), Error);
  CHECK_THROWS_AS(generate_society(SocietyKind::kTrace, 3, p, 0), Error);

  SocietyParams sp;
  sp.support_nodes = 3;
  auto with_support = generate_society(SocietyKind::kRingStatic, 3, sp, 0);
  CHECK(with_support.agents[0].mind.size() == 4);
}

TEST_CASE("society kind names round-trip") {
  for (auto k : {SocietyKind::kCompleteStatic, SocietyKind::kRandomPairwise,
                 SocietyKind::kRingStatic, SocietyKind::kTrace}) {
    CHECK(parse_society_kind(society_kind_name(k)) == k);
  }
  CHECK_FALSE(parse_society_kind("grid").has_value());
}

TEST_CASE("dynamics invariants on random runs") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int round = 0; round < 40; ++round) {
    SocietyParams p;
    p.ticks = 500;
    p.support_nodes = rng() % 3;
    p.topic_confidence = unit(rng);
    p.support_confidence = unit(rng);
    auto kind = round % 3 == 0 ? SocietyKind::kRandomPairwise
                               : (round % 3 == 1 ? SocietyKind::kRingStatic
                                                 : SocietyKind::kCompleteStatic);
    auto s = generate_society(kind, 2 + rng() % 15, p, rng());
    SimConfig c;
    c.mode = round % 2 ? Mode::kCognitive : Mode::kClassic;
    c.eps = unit(rng);
    c.eps_max = unit(rng);
    c.mu = 0.05 + 0.9 * unit(rng);
    c.convergence_window = 0;
    auto t = run(s, c);
    for (const auto& e : t.events) {
      CHECK(e.x_i_post >= 0);
      CHECK(e.x_i_post <= 1);
      CHECK(e.c_i_post >= 0);
      CHECK(e.c_i_post <= 1);
      double before = std::abs(e.x_i_pre - e.x_j_pre);
      double after = std::abs(e.x_i_post - e.x_j_post);
      // Strict once the gap is above rounding scale.
      if ((e.updated_i || e.updated_j) && before > 1e-12) CHECK(after < before);
      if (e.updated_i || e.updated_j) CHECK(after <= before);
      if (e.eps_i == 0) CHECK(e.x_i_post == e.x_i_pre);
      if (e.eps_j == 0) CHECK(e.x_j_post == e.x_j_pre);
      if (c.mode == Mode::kClassic && e.updated_i) {
        CHECK(e.x_i_post + e.x_j_post ==
              doctest::Approx(e.x_i_pre + e.x_j_pre).epsilon(1e-15));
      }
    }
    if (c.mode == Mode::kClassic) {
      CHECK(std::abs(mean(t.final_opinions) - mean(t.initial_opinions)) <= 1e-9);
    }
  }
}

TEST_CASE("classic runs agree with a direct Deffuant update") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SocietyParams p;
    p.contacts = 400;
    auto s = generate_society(SocietyKind::kRandomPairwise, 30, p, seed);
    SimConfig c;
    c.eps = 0.25;
    c.convergence_window = 0;
    auto t = run(s, c);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& sc : contact_schedule(s)) {
      pairs.emplace_back(sc.first.index, sc.second.index);
    }
    std::vector<double> x = t.initial_opinions;
    oracle::deffuant(x, pairs, c.eps, c.mu, c.max_events);
    CHECK(x == t.final_opinions);
  }
}

TEST_CASE("convergence stops the run early") {
  auto s = generate_society(SocietyKind::kCompleteStatic, 10, {}, 3);
  SimConfig c;
  c.eps = 1;
  c.convergence_window = 200;
  auto t = run(s, c);
  REQUIRE(t.converged_at.has_value());
  CHECK(*t.converged_at == t.events.size() - 1);
  CHECK(t.events.size() < 10000);
}
