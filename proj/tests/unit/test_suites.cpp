// Copyright 2026 The Entropion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <limits>
#include <set>

#include "doctest.h"
#include "entropion/json_io.hpp"
#include "entropion/suites.hpp"

using namespace entropion;

namespace {

CheckReport without_runtime(CheckReport r) {
  r.runtime_ms = 0.0;
  return r;
}

std::string as_json(const CheckReport& r) { return reports_to_json({without_runtime(r)}); }

}  // namespace

TEST_CASE("registry") {
  std::set<std::string> names;
  for (const auto& s : suite_registry()) {
    CHECK(names.insert(s.name).second);
    CHECK(s.default_trials > 0);
    CHECK_FALSE(s.default_dims.empty());
    CHECK(find_suite(s.name) == &s);
  }
  CHECK(find_suite("nosuch") == nullptr);
  CHECK(expand_suite_names({"all"}).size() == suite_registry().size());
  CHECK(expand_suite_names({"ssa", "holevo_chi"}) == std::vector<std::string>{"ssa", "holevo_chi"});
  CHECK_THROWS_AS(expand_suite_names({"ssa", "nosuch"}), InvariantError);
  CHECK_THROWS_AS(run_suite("nosuch", {}), InvariantError);
  SuiteOptions bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(run_suite("ssa", bad), InvariantError);
}

TEST_CASE("reports do not depend on scheduling") {
  for (const char* name : {"joint_convexity", "block_contraction", "holevo_chain", "ssa"}) {
    SuiteOptions serial;
    serial.trials = 60;
    serial.seed = 11;
    SuiteOptions parallel = serial;
    parallel.workers = 4;
    const CheckReport a = run_suite(name, serial);
    const CheckReport b = run_suite(name, parallel);
    const CheckReport c = run_suite(name, serial);
    CHECK(as_json(a) == as_json(b));
    CHECK(as_json(a) == as_json(c));
    CHECK(a.indeterminate == b.indeterminate);
  }
}

TEST_CASE("seed changes the instances") {
  SuiteOptions o;
  o.trials = 20;
  o.seed = 1;
  const CheckReport a = run_suite("schwarz_quadratic", o);
  o.seed = 2;
  const CheckReport b = run_suite("schwarz_quadratic", o);
  CHECK(a.worst_margin != b.worst_margin);
}

TEST_CASE("options") {
  SuiteOptions o;
  o.trials = 7;
  o.dims = {2};
  const CheckReport r = run_suite("resolvent", o);
  CHECK(r.trials == 7);
  CHECK(r.suite_name == "resolvent");
  CHECK(r.pass());
  CHECK(r.failures.empty());
  CHECK(run_suite("scalar_log", {}).trials == find_suite("scalar_log")->default_trials);
}

TEST_CASE("collect_report") {
  using Kind = TrialOutcome::Kind;
  const std::vector<TrialOutcome> mixed{{Kind::evaluated, 0.5, "a"},
                                        {Kind::evaluated, -1e-10, "b"},
                                        TrialOutcome::skipped("c"),
                                        TrialOutcome::band("d"),
                                        {Kind::evaluated, -0.25, "e"}};
  const CheckReport r = collect_report("x", 9, 1e-9, mixed);
  CHECK(r.trials == 5);
  CHECK(r.worst_margin == -0.25);
  CHECK(r.skipped_infinite == 1);
  CHECK(r.indeterminate == 1);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].trial == 4);
  CHECK(r.failures[0].digest == "e");
  CHECK_FALSE(r.pass());

  // Nothing evaluated: vacuous pass.
  const CheckReport none = collect_report("x", 0, 1e-9, {TrialOutcome::skipped("s")});
  CHECK(none.worst_margin == 0.0);
  CHECK(none.pass());

  const CheckReport nan =
      collect_report("x", 0, 1e-9, {{Kind::evaluated, 1.0, "a"}, {Kind::evaluated, std::nan(""), "b"}});
  CHECK(nan.worst_margin == -std::numeric_limits<double>::infinity());
  CHECK_FALSE(nan.pass());
  CHECK(nan.failures.size() == 1);
}

TEST_CASE("every suite passes a short default run") {
  for (const auto& s : suite_registry()) {
    SuiteOptions o;
    o.trials = std::min<std::uint64_t>(s.default_trials, 20);
    o.seed = 3;
    const CheckReport r = run_suite(s.name, o);
    INFO(s.name);
    CHECK(r.pass());
    CHECK(r.failures.empty());
  }
}
