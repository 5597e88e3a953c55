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

#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "entropion/errors.hpp"
#include "entropion/quadrature.hpp"

using namespace entropion;

TEST_CASE("Gauss-Legendre nodes are the roots of P_10 and integrate degree 19 exactly") {
  const auto& gl = GaussLegendre10::get();
  double wsum = 0.0;
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(std::abs(boost::math::legendre_p(10, gl.nodes[k])) <= 1e-14);
    if (k > 0) CHECK(gl.nodes[k - 1] < gl.nodes[k]);
    wsum += gl.weights[k];
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
  // int_0^1 x^19 = 1/20; x^20 is no longer exact.
  CHECK(gl.integrate([](double x) { return std::pow(x, 19); }, 0.0, 1.0) == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(std::abs(gl.integrate([](double x) { return std::pow(x, 20); }, -1.0, 1.0) - 2.0 / 21.0) > 1e-8);
}

TEST_CASE("uniform and adaptive composite rules") {
  const auto f = [](double x) { return std::exp(x); };
  CHECK(integrate_uniform(f, 0.0, 1.0, 4) == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-15));
  CHECK_THROWS_AS(integrate_uniform(f, 0.0, 1.0, 0), InvariantError);

  const auto peaked = [](double x) { return 1.0 / (1e-4 + x * x); };
  const QuadratureResult r = integrate_adaptive(peaked, -1.0, 1.0);
  CHECK(r.value == doctest::Approx(2.0 * std::atan(1.0 / 1e-2) / 1e-2).epsilon(1e-12));
  CHECK(r.panels > 8);

  QuadratureConfig tight;
  tight.max_refinements = 1;
  CHECK_THROWS_AS(integrate_adaptive(peaked, -1.0, 1.0, tight), NonConvergence);
  QuadratureConfig bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvariantError);
}

TEST_CASE("half line") {
  const QuadratureResult r = integrate_half_line([](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); });
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  const QuadratureResult g = integrate_half_line([](double t) { return std::exp(-t); });
  CHECK(g.value == doctest::Approx(1.0).epsilon(1e-10));
}
