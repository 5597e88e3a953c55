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

#include "entropion/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entropion/errors.hpp"

namespace entropion {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw InvariantError("QuadratureConfig: abs_tol must be positive");
  if (max_refinements < 1) throw InvariantError("QuadratureConfig: max_refinements must be >= 1");
  if (base_panels < 1) throw InvariantError("QuadratureConfig: base_panels must be >= 1");
}

namespace {

// Roots of P_10 by Newton iteration from the Chebyshev-like initial guess,
// weights 2 / ((1 - x^2) P_10'(x)^2).
GaussLegendre10 build_rule() {
  constexpr int n = 10;
  GaussLegendre10 rule{};
  for (int i = 0; i < n / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

struct AdaptiveState {
  const std::function<double(double)>& f;
  const GaussLegendre10& rule;
  double tol_density;  // allowed error per unit length
  int max_depth;
  std::size_t panels = 0;
  std::size_t evaluations = 0;

  double panel(double a, double b) {
    evaluations += 10;
    return rule.integrate(f, a, b);
  }

  double refine(double a, double b, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(a, mid);
    const double right = panel(mid, b);
    const double halves = left + right;
    if (std::abs(halves - whole) <= tol_density * (b - a)) {
      panels += 2;
      return halves;
    }
    if (depth >= max_depth)
      throw NonConvergence("adaptive quadrature: panel [" + std::to_string(a) + ", " + std::to_string(b) +
                           "] still unresolved after " + std::to_string(max_depth) + " halvings");
    return refine(a, mid, left, depth + 1) + refine(mid, b, right, depth + 1);
  }
};

}  // namespace

const GaussLegendre10& GaussLegendre10::get() {
  static const GaussLegendre10 rule = build_rule();
  return rule;
}

double GaussLegendre10::integrate(const std::function<double(double)>& f, double a, double b) const {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
  return half * sum;
}

double integrate_uniform(const std::function<double(double)>& f, double a, double b, std::size_t panels) {
  if (panels == 0) throw InvariantError("integrate_uniform: need at least one panel");
  const auto& rule = GaussLegendre10::get();
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t k = 0; k < panels; ++k) {
    const double lo = a + h * static_cast<double>(k);
    const double hi = (k + 1 == panels) ? b : lo + h;
    sum += rule.integrate(f, lo, hi);
  }
  return sum;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(b > a)) throw InvariantError("integrate_adaptive: need a < b");
  AdaptiveState state{f, GaussLegendre10::get(), cfg.abs_tol / (b - a), cfg.max_refinements};
  const double h = (b - a) / cfg.base_panels;
  double total = 0.0;
  for (int k = 0; k < cfg.base_panels; ++k) {
    const double lo = a + h * k;
    const double hi = (k + 1 == cfg.base_panels) ? b : lo + h;
    total += state.refine(lo, hi, state.panel(lo, hi), 1);
  }
  return {total, state.panels, state.evaluations};
}

QuadratureResult integrate_half_line(const std::function<double(double)>& g, const QuadratureConfig& cfg) {
  const std::function<double(double)> mapped = [&g](double s) {
    const double one_minus = 1.0 - s;
    const double t = s / one_minus;
    return g(t) / (one_minus * one_minus);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, cfg);
}

}  // namespace entropion
