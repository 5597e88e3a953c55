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

// Named randomized suites. A suite draws one instance per trial from
// Rng::for_trial(seed, trial), so a report depends only on (suite, dims,
// trials, seed, tol) and not on how trials are scheduled.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "entropion/inequalities.hpp"
#include "entropion/randgen.hpp"

namespace entropion {

struct TrialOutcome {
  enum class Kind { evaluated, skipped_infinite, indeterminate };
  Kind kind = Kind::evaluated;
  double margin = 0.0;
  std::string digest;

  static TrialOutcome skipped(std::string digest) { return {Kind::skipped_infinite, 0.0, std::move(digest)}; }
  static TrialOutcome band(std::string digest) { return {Kind::indeterminate, 0.0, std::move(digest)}; }
};

/// Draws and checks one instance. `d` is dims[trial % dims.size()]; each
/// suite documents how it reads it.
using TrialFn = std::function<TrialOutcome(Rng& rng, std::uint64_t trial, std::size_t d, double tol)>;

struct SuiteInfo {
  std::string name;
  std::string description;
  std::uint64_t default_trials;
  std::vector<std::size_t> default_dims;
  TrialFn trial;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);

/// Resolves "all" and validates names; throws InvariantError on an unknown one.
std::vector<std::string> expand_suite_names(const std::vector<std::string>& names);

struct SuiteOptions {
  std::vector<std::size_t> dims;  // empty: the suite's defaults
  std::uint64_t trials = 0;       // 0: the suite's default
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  unsigned workers = 1;
};

/// Folds per-trial outcomes into a report (runtime left at 0). A NaN margin
/// is a failure and drives worst_margin to -inf.
CheckReport collect_report(const std::string& name, std::uint64_t seed, double tol,
                           const std::vector<TrialOutcome>& outcomes);

CheckReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace entropion
