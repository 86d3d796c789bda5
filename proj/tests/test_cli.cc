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

#include <algorithm>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli_runner.hpp"
#include "doctest.h"

using nlohmann::json;

namespace {

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

// One line, machine-parseable.
void check_error_line(const cli::Result& r, const std::string& kind) {
  CHECK(r.err.rfind("error: " + kind + ": ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

}  // namespace

TEST_CASE("analyze") {
  cli::TempDir dir("cli_analyze");
  cli::spit(dir / "cx.trace", "b c 0 1\na b 2 3\n");
  auto r = cli::run({"analyze", dir / "cx.trace", "--reach", "a", "0"});
  CHECK(r.exit_code == 0);
  CHECK(has(r.out, "footprint: edges=2 connected=yes"));
  CHECK(has(r.out, "unreachable: c\n"));
  CHECK(has(r.out, "characteristic_dates: [0,1,2,3]"));

  cli::spit(dir / "empty.trace", "# nothing\n");
  auto e = cli::run({"analyze", dir / "empty.trace", "--lifetime", "0", "5",
                     "--snapshots", dir / "snap.csv"});
  CHECK(e.exit_code == 0);
  CHECK(has(e.out, "snapshots: 1\n"));
  CHECK(cli::slurp(dir / "snap.csv") ==
        "index,start,end,edge_count,edges\n0,0,5,0,\n");

  cli::spit(dir / "bad.trace", "a b 0 1\na b 0\n");
  auto b = cli::run({"analyze", dir / "bad.trace"});
  CHECK(b.exit_code == 2);
  check_error_line(b, "parse");
  CHECK(has(b.err, "bad.trace:2:"));

  auto missing = cli::run({"analyze", dir / "nope.trace"});
  CHECK(missing.exit_code == 2);
  check_error_line(missing, "io");
}

TEST_CASE("journey") {
  cli::TempDir dir("cli_journey");
  cli::spit(dir / "cx.trace", "b c 0 1\na b 2 3\n");
  auto found = cli::run({"journey", dir / "cx.trace", "a", "b", "0"});
  CHECK(found.exit_code == 0);
  CHECK(found.out == "hop 0: a -> b @ 2\narrival: 2\n");

  auto self = cli::run({"journey", dir / "cx.trace", "c", "c", "1.5"});
  CHECK(self.exit_code == 0);
  CHECK(self.out == "arrival: 1.5\n");

  auto none = cli::run({"journey", dir / "cx.trace", "a", "c", "0"});
  CHECK(none.exit_code == 3);
  CHECK(none.out == "none\n");

  auto unknown = cli::run({"journey", dir / "cx.trace", "a", "z", "0"});
  CHECK(unknown.exit_code == 2);
  check_error_line(unknown, "not_found");
}

TEST_CASE("usage errors") {
  auto r = cli::run({"journey"});
  CHECK(r.exit_code == 2);
  check_error_line(r, "usage");
  auto bogus = cli::run({"frobnicate"});
  CHECK(bogus.exit_code == 2);
  auto nothing = cli::run({});
  CHECK(nothing.exit_code == 2);
}

TEST_CASE("simulate") {
  cli::TempDir dir("cli_simulate");
  json cfg = {{"mode", "classic"},
              {"eps", 1.0},
              {"seed", 12},
              {"society", {{"kind", "complete_static"}, {"n", 100}}}};
  cli::spit(dir / "cfg.json", cfg.dump());
  auto r = cli::run({"simulate", dir / "cfg.json", "--out", dir / "out",
                     "--metrics"});
  REQUIRE(r.exit_code == 0);
  auto summary = json::parse(cli::slurp(dir / "out/summary.json"));
  CHECK(summary["clusters"]["count"] == 1);
  auto manifest = json::parse(cli::slurp(dir / "out/manifest.json"));
  CHECK(manifest["outputs"].size() == 3);
  CHECK(manifest["seed"] == 12);

  auto again = cli::run({"simulate", dir / "cfg.json", "--out", dir / "again",
                         "--quiet", "--metrics"});
  REQUIRE(again.exit_code == 0);
  CHECK(again.err.empty());
  for (const char* f : {"trajectory.csv", "summary.json", "metrics.csv"}) {
    CHECK(cli::slurp(dir / "out/" + f) == cli::slurp(dir / "again/" + f));
  }

  auto env = cli::run({"simulate", dir / "cfg.json", "--quiet"},
                      "TVGOP_OUTPUT_DIR=" + cli::quote(dir / "env"));
  CHECK(env.exit_code == 0);
  CHECK(std::filesystem::exists(dir / "env/summary.json"));

  json bad = cfg;
  bad["eps"] = 7;
  bad["mystery"] = true;
  cli::spit(dir / "bad.json", bad.dump());
  auto b = cli::run({"simulate", dir / "bad.json", "--out", dir / "bad"});
  CHECK(b.exit_code == 2);
  check_error_line(b, "invalid_argument");
  CHECK(has(b.err, "eps"));
  CHECK(has(b.err, "mystery"));

  json minds = {{"society",
                 {{"kind", "trace"},
                  {"trace", "t.trace"},
                  {"minds", {{"a", "minds/absent.json"}}}}}};
  cli::spit(dir / "t.trace", "a b 0 1\n");
  cli::spit(dir / "minds.json", minds.dump());
  auto m = cli::run({"simulate", dir / "minds.json", "--out", dir / "m"});
  CHECK(m.exit_code == 2);
  check_error_line(m, "io");
  CHECK(has(m.err, "minds/absent.json"));
}

TEST_CASE("generate") {
  cli::TempDir dir("cli_generate");
  auto r = cli::run({"generate", "--kind", "ring_static", "--n", "4", "--seed",
                     "3", "--out", dir / "ring"});
  REQUIRE(r.exit_code == 0);
  std::istringstream trace(cli::slurp(dir / "ring/society.trace"));
  int contacts = 0;
  for (std::string line; std::getline(trace, line);) {
    std::istringstream f(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(f), {}};
    if (tok.size() >= 4 && tok[0][0] != '#') ++contacts;
  }
  CHECK(contacts == 4);

  auto again = cli::run({"generate", "--kind", "ring_static", "--n", "4",
                         "--seed", "3", "--out", dir / "ring2"});
  REQUIRE(again.exit_code == 0);
  for (const char* f : {"society.trace", "config.json", "minds/0.json"}) {
    CHECK(cli::slurp(dir / "ring/" + f) == cli::slurp(dir / "ring2/" + f));
  }

  auto one = cli::run({"generate", "--kind", "ring_static", "--n", "1",
                       "--out", dir / "one"});
  CHECK(one.exit_code == 2);
  check_error_line(one, "invalid_argument");
}
