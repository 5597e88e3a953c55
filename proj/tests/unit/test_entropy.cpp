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

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "entropion/entropy.hpp"
#include "entropion/randgen.hpp"
#include "oracles.hpp"

using namespace entropion;

namespace {

// int_0^inf (a + t b)^{-1} (1 + t)^{-2} dt by double-exponential quadrature.
double kernel_oracle(double a, double b) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([a, b](double t) { return 1.0 / ((a + t * b) * (1.0 + t) * (1.0 + t)); });
}

double kl(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) s += p[i] * std::log(p[i] / q[i]);
  return s;
}

const double kLn2 = std::numbers::ln2;

}  // namespace

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(DensityMatrix(basis_projector(2, 0))) == 0.0);
  for (std::size_t d = 1; d <= 6; ++d)
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(d)) == doctest::Approx(std::log(double(d))).epsilon(1e-14));
  const double want = -(0.25 * std::log(0.25) + 0.75 * std::log(0.75));
  CHECK(std::abs(want - 0.562335) <= 1e-6);
  CHECK(von_neumann_entropy(DensityMatrix(HermitianMatrix::diagonal({0.25, 0.75}))) ==
        doctest::Approx(want).epsilon(1e-14));

  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 5;
    const DensityMatrix rho = random_density(d, 1 + trial % d, rng);
    const double s = von_neumann_entropy(rho);
    CHECK(s == doctest::Approx(oracle::entropy(rho.matrix())).epsilon(1e-12));
    CHECK(s >= -1e-12);
    CHECK(s <= std::log(double(d)) + 1e-9);
  }
  CHECK(shannon_entropy({0.5, 0.5, 0.0}) == doctest::Approx(kLn2));
}

TEST_CASE("relative entropy examples") {
  Rng rng(2);
  const DensityMatrix rho = random_density(3, rng);
  CHECK(std::abs(relative_entropy(rho, rho).value()) <= 1e-10);

  const HermitianMatrix p = HermitianMatrix::diagonal({0.5, 0.5});
  const HermitianMatrix q = HermitianMatrix::diagonal({0.25, 0.75});
  const double want = kl({0.5, 0.5}, {0.25, 0.75});
  CHECK(std::abs(want - 0.143841) <= 1e-6);
  CHECK(relative_entropy(p, q).value() == doctest::Approx(want).epsilon(1e-14));

  const EntropyValue inf = relative_entropy(HermitianMatrix(basis_projector(2, 0)), HermitianMatrix(basis_projector(2, 1)));
  CHECK_FALSE(inf.is_finite());
  CHECK(std::isinf(inf.value()));

  // Support condition met with singular Q: P = |0><0|, Q = diag(1/2, 1/2, 0).
  const HermitianMatrix ps(basis_projector(3, 0));
  const HermitianMatrix qs = HermitianMatrix::diagonal({0.5, 0.5, 0.0});
  CHECK(relative_entropy(ps, qs).value() == doctest::Approx(kLn2).epsilon(1e-14));

  CHECK_THROWS_AS(relative_entropy(p, HermitianMatrix::identity(3)), DimensionError);
  CHECK_THROWS_AS(relative_entropy(HermitianMatrix::diagonal({1, -1}), q), InvariantError);
}

TEST_CASE("relative entropy against an Eigen-based oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const DensityMatrix p = random_density(d, rng), q = random_density(d, rng);
    CHECK(relative_entropy(p, q).value() == doctest::Approx(oracle::relent(p.matrix(), q.matrix())).epsilon(1e-10));
  }
}

TEST_CASE("integral route") {
  const HermitianMatrix two = HermitianMatrix::diagonal({2.0});
  const HermitianMatrix one = HermitianMatrix::diagonal({1.0});
  CHECK(relative_entropy_integral(two, one).value() == doctest::Approx(2.0 * kLn2).epsilon(1e-12));
  CHECK(std::abs(2.0 * kLn2 - 1.386294) <= 1e-6);

  Rng rng(4);
  const DensityMatrix rho = random_density(3, rng);
  CHECK(std::abs(relative_entropy_integral(rho, rho).value()) <= 1e-14);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix p = random_density(3, rng), q = random_density(3, rng);
    CHECK(std::abs(relative_entropy_integral(p, q).value() - relative_entropy(p, q).value()) <= 1e-8);
  }

  CHECK_THROWS_AS(relative_entropy_integral(HermitianMatrix(basis_projector(2, 0)), HermitianMatrix(basis_projector(2, 1))),
                  KernelObstruction);
  // Singular but compatible: ker(Q) inside ker(P).
  const HermitianMatrix ps(basis_projector(3, 0));
  const HermitianMatrix qs = HermitianMatrix::diagonal({0.5, 0.5, 0.0});
  CHECK(relative_entropy_integral(ps, qs).value() == doctest::Approx(kLn2).epsilon(1e-9));

  // Fixed-panel variant converges to the same value.
  const DensityMatrix p = random_density(3, rng), q = random_density(3, rng);
  CHECK(std::abs(relative_entropy_integral_fixed(p, q, 64).value() - relative_entropy(p, q).value()) <= 1e-10);
}

TEST_CASE("kernel_k closed form against quadrature") {
  CHECK(kernel_k(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kernel_k(1, 2) == doctest::Approx(2.0 * kLn2 - 1.0).epsilon(1e-15));
  CHECK(std::abs(2.0 * kLn2 - 1.0 - 0.386294) <= 1e-6);
  CHECK(kernel_oracle(1, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(kernel_k(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(kernel_k(1.0, -1.0), DomainError);

  double worst = 0.0;
  for (int i = -12; i <= 12; ++i)
    for (int j = -12; j <= 12; ++j) {
      const double a = std::pow(10.0, i / 4.0), b = std::pow(10.0, j / 4.0);
      const double k = kernel_k(a, b);
      CHECK(k > 0.0);
      worst = std::max(worst, std::abs(k - kernel_oracle(a, b)) / kernel_oracle(a, b));
    }
  CHECK(worst <= 1e-12);

  // Near the diagonal the closed form cancels; the series branch must not.
  for (double eps : {1e-12, 1e-9, 1e-6, 1e-3, 0.05, 0.099, 0.101}) {
    const double b = 1.0 + eps;
    CHECK(kernel_k(1.0, b) == doctest::Approx(kernel_oracle(1.0, b)).epsilon(1e-13));
  }
}

TEST_CASE("spectral kernel route") {
  const HermitianMatrix p = HermitianMatrix::diagonal({0.5, 0.5});
  const HermitianMatrix q = HermitianMatrix::diagonal({0.25, 0.75});
  CHECK(relative_entropy_spectral_kernel(p, q).value() == doctest::Approx(kl({0.5, 0.5}, {0.25, 0.75})).epsilon(1e-14));
  Rng rng(5);
  const DensityMatrix rho = random_density(4, rng);
  CHECK(std::abs(relative_entropy_spectral_kernel(rho, rho).value()) <= 1e-14);

  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const DensityMatrix a = random_density(d, rng), b = random_density(d, rng);
    const double s = relative_entropy(a, b).value();
    CHECK(std::abs(relative_entropy_spectral_kernel(a, b).value() - s) <= 1e-9);
    CHECK(std::abs(relative_entropy_integral(a, b).value() - s) <= 1e-9);
  }
  // Singular compatible pair.
  const PsdPair pair = random_kernel_compatible_pair(4, 1, 2, rng);
  CHECK(std::abs(relative_entropy_spectral_kernel(pair.p, pair.q).value() - relative_entropy(pair.p, pair.q).value()) <=
        1e-9);
  CHECK_THROWS_AS(relative_entropy_spectral_kernel(HermitianMatrix(basis_projector(2, 0)), HermitianMatrix(basis_projector(2, 1))),
                  KernelObstruction);
}

TEST_CASE("scalar log identities") {
  const ScalarLogIdentity one = scalar_log_identity(1.0);
  CHECK(one.lhs == 0.0);
  CHECK(std::abs(one.rhs1) <= 1e-15);
  CHECK(std::abs(one.rhs2) <= 1e-15);
  for (double w : {0.1, 0.5, 2.0, 10.0}) {
    const ScalarLogIdentity r = scalar_log_identity(w);
    CHECK(std::abs(r.rhs1 - r.lhs) <= 1e-10);
    CHECK(std::abs(r.rhs2 - r.lhs) <= 1e-10);
  }
  CHECK(scalar_log_identity(2.0).rhs1 == doctest::Approx(-kLn2).epsilon(1e-10));
  CHECK(scalar_log_identity(0.5).rhs2 == doctest::Approx(kLn2).epsilon(1e-10));
  CHECK_THROWS_AS(scalar_log_identity(0.0), DomainError);
}

TEST_CASE("conditional entropy") {
  Rng rng(6);
  const DensityMatrix a = random_density(2, rng), b = random_density(3, rng);
  const DensityMatrix ab(HermitianMatrix::hermitian_part(tensor(a.matrix(), b.matrix())));
  CHECK(conditional_entropy(ab, {2, 3}) == doctest::Approx(von_neumann_entropy(b)).epsilon(1e-12));

  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::numbers::sqrt2;
  CHECK(conditional_entropy(DensityMatrix::pure(bell), {2, 2}) == doctest::Approx(-kLn2).epsilon(1e-12));

  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_density(6, 1 + trial % 6, rng);
    CHECK(std::abs(conditional_entropy(rho, {2, 3}) - conditional_entropy_via_relative_entropy(rho, {2, 3})) <= 1e-9);
  }
  CHECK_THROWS_AS(conditional_entropy(ab, {6}), DimensionError);
}

TEST_CASE("Klein, homogeneity, equal-trace nonnegativity, unitary invariance") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const PsdPair pair = random_kernel_compatible_pair(d, 1 + trial % d, d, rng);
    const HermitianMatrix p = HermitianMatrix::hermitian_part(rng.uniform(0.2, 3.0) * pair.p.matrix());
    const HermitianMatrix q = HermitianMatrix::hermitian_part(rng.uniform(0.2, 3.0) * pair.q.matrix());
    const double h = relative_entropy(p, q).value();
    CHECK(h >= p.trace() - q.trace() - 1e-9);
    for (double x : {0.1, 0.5, 2.0, 10.0}) {
      const double hx = relative_entropy(HermitianMatrix::hermitian_part(x * p.matrix()),
                                         HermitianMatrix::hermitian_part(x * q.matrix()))
                            .value();
      CHECK(std::abs(hx - x * h) <= 1e-9);
    }
    CHECK(relative_entropy(pair.p, pair.q).value() >= -1e-9);
    const ComplexMatrix u = random_unitary(d, rng);
    const double hu = relative_entropy(HermitianMatrix::hermitian_part(u * p.matrix() * u.adjoint()),
                                       HermitianMatrix::hermitian_part(u * q.matrix() * u.adjoint()))
                          .value();
    CHECK(std::abs(hu - h) <= 1e-9);
  }
}

TEST_CASE("quadratic form and Bures distance") {
  Rng rng(8);
  const DensityMatrix rho = random_density(3, rng);
  CHECK(std::abs(quadratic_relent(rho, rho)) <= 1e-15);
  CHECK(bures_distance(rho, rho) <= 1e-7);  // sqrt amplifies rounding in 1 - F
  CHECK(bures_distance(DensityMatrix(basis_projector(2, 0)), DensityMatrix(basis_projector(2, 1))) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  const std::vector<double> p{0.2, 0.3, 0.5}, q{0.6, 0.1, 0.3};
  double want = 0.0;
  for (int i = 0; i < 3; ++i) want += (q[i] - p[i]) * (q[i] - p[i]) / (p[i] + q[i]);
  CHECK(quadratic_relent(HermitianMatrix::diagonal(p), HermitianMatrix::diagonal(q)) ==
        doctest::Approx(want).epsilon(1e-14));
  // Fidelity oracle: Tr sqrt(sqrt(P) Q sqrt(P)) through Eigen.
  const DensityMatrix a = random_density(3, rng), b = random_density(3, rng);
  const ComplexMatrix ra = oracle::fun(a.matrix(), [](double x) { return std::sqrt(x); });
  const ComplexMatrix inner = ra * b.matrix() * ra;
  const double f = oracle::fun(inner, [](double x) { return std::sqrt(std::max(x, 0.0)); }).trace().real();
  CHECK(bures_distance(a, b) == doctest::Approx(std::sqrt(2.0 * (1.0 - f))).epsilon(1e-10));
}
