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

#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace entropion {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_refinements = 30;
  int base_panels = 8;

  void validate() const;
};

/// 10-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre10 {
  std::array<double, 10> nodes;
  std::array<double, 10> weights;

  static const GaussLegendre10& get();
  double integrate(const std::function<double(double)>& f, double a, double b) const;
};

struct QuadratureResult {
  double value;
  std::size_t panels;  // accepted panels
  std::size_t evaluations;
};

/// Composite rule over `panels` equal panels of [a, b].
double integrate_uniform(const std::function<double(double)>& f, double a, double b, std::size_t panels);

/// Starts from cfg.base_panels equal panels and halves each panel until the
/// panel estimate and the sum of its halves differ by at most
/// abs_tol * (panel width) / (b - a). Throws NonConvergence when a panel needs
/// more than cfg.max_refinements halvings.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

/// int_0^inf g(t) dt via t = s / (1 - s), dt = (1 + t)^2 ds, integrated
/// adaptively over s in [0, 1]. Gauss nodes never touch s = 1.
QuadratureResult integrate_half_line(const std::function<double(double)>& g, const QuadratureConfig& cfg = {});

}  // namespace entropion
