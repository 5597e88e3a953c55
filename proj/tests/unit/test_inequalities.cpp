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
#include <numbers>

#include "doctest.h"
#include "entropion/entropy.hpp"
#include "entropion/inequalities.hpp"
#include "entropion/randgen.hpp"
#include "oracles.hpp"

using namespace entropion;

namespace {

HermitianMatrix diag(std::vector<double> v) { return HermitianMatrix::diagonal(v); }

double kl(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) s += p[i] * std::log(p[i] / q[i]);
  return s;
}

double shannon(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log(x);
  return s;
}

ComplexMatrix scalar(Complex z) { return ComplexMatrix::Constant(1, 1, z); }

}  // namespace

TEST_CASE("joint convexity: equality and classical cases") {
  Rng rng(1);
  const PsdPair pq = random_kernel_compatible_pair(3, 3, 3, rng);
  const ConvexityInstance same{{0.2, 0.3, 0.5}, {pq.p, pq.p, pq.p}, {pq.q, pq.q, pq.q}};
  const auto eq = check_joint_convexity(same);
  REQUIRE(eq);
  CHECK(std::abs(eq->margin) <= 1e-12);

  const std::vector<double> x{0.4, 0.6};
  const std::vector<std::vector<double>> p{{0.1, 0.2, 0.7}, {0.5, 0.25, 0.25}};
  const std::vector<std::vector<double>> q{{0.3, 0.3, 0.4}, {0.2, 0.6, 0.2}};
  std::vector<double> pm(3), qm(3);
  for (int i = 0; i < 3; ++i) {
    pm[i] = x[0] * p[0][i] + x[1] * p[1][i];
    qm[i] = x[0] * q[0][i] + x[1] * q[1][i];
  }
  const double want = x[0] * kl(p[0], q[0]) + x[1] * kl(p[1], q[1]) - kl(pm, qm);
  const auto got = check_joint_convexity({x, {diag(p[0]), diag(p[1])}, {diag(q[0]), diag(q[1])}});
  REQUIRE(got);
  CHECK(got->margin == doctest::Approx(want).epsilon(1e-12));
  CHECK(got->margin > 0.0);
  CHECK(got->homogeneity_gap <= 1e-12);
}

TEST_CASE("joint convexity: validation and infinite terms") {
  const HermitianMatrix a = diag({0.5, 0.5});
  CHECK_THROWS_AS(ConvexityInstance({{0.5, 0.6}, {a, a}, {a, a}}).validate(), InvariantError);
  CHECK_THROWS_AS(ConvexityInstance({{-0.5, 1.5}, {a, a}, {a, a}}).validate(), InvariantError);
  CHECK_THROWS_AS(ConvexityInstance({{1.0}, {a, a}, {a}}).validate(), DimensionError);
  CHECK_FALSE(check_joint_convexity({{1.0}, {a}, {diag({1.0, 0.0})}}));
}

TEST_CASE("joint convexity: random instances") {
  Rng rng(2);
  double worst = 1.0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 2 + trial % 4, n = 1 + trial % 4;
    ConvexityInstance inst{random_simplex(n, rng), {}, {}};
    for (std::size_t j = 0; j < n; ++j) {
      const PsdPair pq = random_kernel_compatible_pair(d, 1 + j % d, d, rng);
      inst.p.push_back(pq.p);
      inst.q.push_back(pq.q);
    }
    const auto r = check_joint_convexity(inst);
    REQUIRE(r);
    worst = std::min({worst, r->margin, r->subadditive_margin, r->scaled_margin});
    CHECK(r->homogeneity_gap <= 1e-10);
  }
  CHECK(worst >= -1e-9);
}

TEST_CASE("schwarz quadratic") {
  Rng rng(3);
  const PsdPair pq = random_kernel_compatible_pair(3, 3, 3, rng);
  const ComplexMatrix a = random_gaussian_matrix(3, 3, rng);
  CHECK(std::abs(check_schwarz_quadratic({a}, {pq.p}, {pq.q}, 0.7)) <= 1e-12);

  // 1x1: sum |a_j|^2 / (p_j + t q_j) - |sum a_j|^2 / sum (p_j + t q_j).
  const std::vector<Complex> av{{1.0, 2.0}, {-0.5, 0.3}, {0.2, -1.0}};
  const std::vector<double> pv{0.3, 1.2, 0.8}, qv{0.9, 0.1, 2.0};
  for (double t : {0.0, 0.5, 1.0, 10.0}) {
    double lhs = 0.0, den = 0.0;
    Complex sum = 0.0;
    std::vector<ComplexMatrix> as;
    std::vector<HermitianMatrix> ps, qs;
    for (int j = 0; j < 3; ++j) {
      lhs += std::norm(av[j]) / (pv[j] + t * qv[j]);
      den += pv[j] + t * qv[j];
      sum += av[j];
      as.push_back(scalar(av[j]));
      ps.push_back(diag({pv[j]}));
      qs.push_back(diag({qv[j]}));
    }
    CHECK(check_schwarz_quadratic(as, ps, qs, t) == doctest::Approx(lhs - std::norm(sum) / den).epsilon(1e-12));
  }

  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 3, n = 2 + trial % 3;
    const double t = std::vector<double>{0.0, 0.5, 1.0, 10.0}[trial % 4];
    std::vector<ComplexMatrix> as;
    std::vector<HermitianMatrix> ps, qs;
    for (std::size_t j = 0; j < n; ++j) {
      const PsdPair r = random_kernel_compatible_pair(d, d, d, rng);
      ps.push_back(r.p);
      qs.push_back(r.q);
      as.push_back(random_gaussian_matrix(d, d, rng));
    }
    worst = std::min(worst, check_schwarz_quadratic(as, ps, qs, t));
  }
  CHECK(worst >= -1e-9);
}

TEST_CASE("operator schwarz") {
  Rng rng(4);
  const HermitianMatrix p1 = random_density(3, rng), p2 = random_density(3, rng);
  CHECK(std::abs(check_operator_schwarz({p1.matrix(), p2.matrix()}, {p1, p2})) <= 1e-10);

  const std::vector<Complex> av{{1.0, -1.0}, {0.25, 2.0}};
  const std::vector<double> pv{0.4, 1.7};
  const double want = std::norm(av[0]) / pv[0] + std::norm(av[1]) / pv[1] - std::norm(av[0] + av[1]) / (pv[0] + pv[1]);
  CHECK(check_operator_schwarz({scalar(av[0]), scalar(av[1])}, {diag({pv[0]}), diag({pv[1]})}) ==
        doctest::Approx(want).epsilon(1e-12));

  // A reaching outside the support of a singular P.
  ComplexMatrix off = ComplexMatrix::Zero(2, 2);
  off(1, 1) = 1.0;
  CHECK_THROWS_AS(check_operator_schwarz({off}, {diag({1.0, 0.0})}), KernelObstruction);

  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 3, n = 2 + trial % 3;
    std::vector<ComplexMatrix> as;
    std::vector<HermitianMatrix> ps;
    for (std::size_t j = 0; j < n; ++j) {
      ps.push_back(random_density(d, rng));
      as.push_back(random_gaussian_matrix(d, d, rng));
    }
    worst = std::min(worst, check_operator_schwarz(as, ps));
  }
  CHECK(worst >= -1e-9);
}

TEST_CASE("CP schwarz") {
  Rng rng(5);
  const KrausMap u = KrausMap::unitary(random_unitary(3, rng));
  const ComplexMatrix a = random_gaussian_matrix(3, 3, rng), b = random_gaussian_matrix(3, 3, rng);
  const DensityMatrix p = random_density(3, rng);
  const CpSchwarzMargins eq = check_cp_schwarz(u, a, b, p);
  CHECK(std::abs(eq.cscp) <= 1e-10);
  CHECK(std::abs(eq.csab) <= 1e-10);

  const KrausMap phi = random_cptp(3, 3, rng);
  const CpSchwarzMargins at_identity =
      check_cp_schwarz(phi, a, ComplexMatrix::Identity(3, 3), HermitianMatrix::identity(3));
  CHECK(at_identity.csab == doctest::Approx(at_identity.cscp).epsilon(1e-10));

  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const CpSchwarzMargins m = check_cp_schwarz(random_cptp(d, 1 + trial % 4, rng), random_gaussian_matrix(d, d, rng),
                                                random_gaussian_matrix(d, d, rng), random_density(d, rng));
    worst = std::min({worst, m.cscp, m.csab});
  }
  CHECK(worst >= -1e-9);
}

TEST_CASE("block contraction") {
  const HermitianMatrix id = HermitianMatrix::identity(2);
  const BlockContraction zero = check_block_contraction(id, id, ComplexMatrix::Zero(2, 2));
  CHECK(zero.block_psd);
  CHECK(zero.schur_psd);
  CHECK(zero.contraction);
  CHECK(zero.agree());

  const BlockContraction big = check_block_contraction(id, id, 2.0 * ComplexMatrix::Identity(2, 2));
  CHECK_FALSE(big.block_psd);
  CHECK_FALSE(big.schur_psd);
  CHECK_FALSE(big.contraction);
  CHECK(big.sigma_max == doctest::Approx(2.0));

  CHECK_THROWS_AS(check_block_contraction(diag({1.0, 0.0}), id, ComplexMatrix::Zero(2, 2)), InvariantError);

  Rng rng(6);
  int psd = 0, evaluated = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const DensityMatrix p = random_density(d, rng), q = random_density(d, rng);
    const ComplexMatrix x = random_gaussian_matrix(d, d, rng);
    const ComplexMatrix xn = x / std::sqrt(oracle::eig(ComplexMatrix(x.adjoint() * x)).eigenvalues().maxCoeff());
    const double s = rng.uniform(0.5, 1.5);
    const ComplexMatrix c = s * sqrt_psd(p).matrix() * xn * sqrt_psd(q).matrix();
    const BlockContraction r = check_block_contraction(p, q, c);
    if (r.indeterminate) continue;
    ++evaluated;
    psd += r.block_psd ? 1 : 0;
    CHECK(r.agree());
    CHECK(r.contraction == (s <= 1.0));
  }
  // The sample must exercise both sides.
  CHECK(psd > 50);
  CHECK(evaluated - psd > 50);
}

TEST_CASE("monotonicity") {
  Rng rng(7);
  const PsdPair pq = random_kernel_compatible_pair(3, 3, 3, rng);
  const DensityMatrix rho(pq.p), gamma(pq.q);
  const auto unitary = check_monotonicity(rho, gamma, KrausMap::unitary(random_unitary(3, rng)));
  REQUIRE(unitary);
  CHECK(std::abs(*unitary) <= 1e-10);

  // Dephasing agrees with the equivalent Kraus channel.
  const auto a = check_monotonicity(rho, gamma, Dephasing{});
  const auto b = check_monotonicity(rho, gamma, dephasing_channel(3));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a == doctest::Approx(*b).epsilon(1e-10));
  CHECK(*a >= -1e-9);

  // ker(gamma) not inside ker(rho): the trial is skipped, not failed.
  const DensityMatrix pure0(diag({1.0, 0.0})), mixed(diag({0.5, 0.5}));
  CHECK_FALSE(check_monotonicity(mixed, pure0, Dephasing{}));
  CHECK_THROWS_AS(check_monotonicity(rho, gamma, KrausMap({ComplexMatrix::Identity(3, 3) * 2.0})), InvariantError);

  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const PsdPair r = random_kernel_compatible_pair(6, 1 + trial % 6, 6, rng);
    const DensityMatrix x(r.p), y(r.q);
    const auto m1 = check_monotonicity(x, y, PartialTrace{{2, 3}, {trial % 2 == 0 ? std::size_t{0} : std::size_t{1}}});
    const auto m2 = check_monotonicity(x, y, random_cptp(6, 4, rng));
    REQUIRE(m1);
    REQUIRE(m2);
    worst = std::min({worst, *m1, *m2});
  }
  CHECK(worst >= -1e-9);
}

TEST_CASE("strong subadditivity") {
  Rng rng(8);
  const DensityMatrix ab = random_density(4, rng), c = random_density(2, rng);
  const DensityMatrix prod(tensor(ab.matrix(), c.matrix()));
  CHECK(std::abs(check_ssa(prod, {2, 2, 2}).primary) <= 1e-10);

  // Pure tripartite state: F vanishes.
  const DensityMatrix pure = DensityMatrix::pure(random_unit_vector(12, rng));
  const SsaMargins pm = check_ssa(pure, {2, 3, 2});
  CHECK(std::abs(pm.f_value) <= 1e-9);
  CHECK(pm.f_value == pm.alt);

  CHECK_THROWS_AS(check_ssa(prod, {2, 2, 3}), DimensionError);

  double worst = 1.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<std::size_t> dims{2, trial % 20 == 0 ? std::size_t{3} : std::size_t{2}, 2};
    const DensityMatrix rho = random_density(dims[0] * dims[1] * dims[2], rng);
    const SsaMargins m = check_ssa(rho, dims);
    worst = std::min({worst, m.primary, m.alt});
    // Oracle: entropies of Eigen-diagonalised marginals.
    const ComplexMatrix& x = rho.matrix();
    const double s_ab = oracle::entropy(oracle::ptrace(x, dims, {0, 1}));
    const double s_bc = oracle::entropy(oracle::ptrace(x, dims, {1, 2}));
    const double s_b = oracle::entropy(oracle::ptrace(x, dims, {1}));
    CHECK(m.primary == doctest::Approx(s_ab + s_bc - oracle::entropy(x) - s_b).epsilon(1e-9));
    CHECK(std::abs(ssa_via_monotonicity(rho, dims) - m.primary) <= 1e-9);
    CHECK(std::abs(ssa_alt_via_purification(rho, dims) - m.primary) <= 1e-9);
  }
  CHECK(worst >= -1e-9);
}

TEST_CASE("concavity") {
  Rng rng(9);
  const DensityMatrix s = random_density(4, rng);
  CHECK(std::abs(check_concavity(ConditionalEntropyF{{2, 2}}, {s, s, s}, {0.2, 0.3, 0.5})) <= 1e-12);
  const KrausMap phi = random_cptp(2, 2, rng);
  const DensityMatrix s2 = random_density(2, rng);
  CHECK(std::abs(check_concavity(EntropyDiffF{phi}, {s2, s2}, {0.5, 0.5})) <= 1e-12);

  // Diagonal states: f is the classical conditional entropy H(B|A) = H(AB) - H(A).
  const std::vector<std::vector<double>> joint{{0.1, 0.2, 0.3, 0.4}, {0.7, 0.1, 0.1, 0.1}};
  const std::vector<double> x{0.35, 0.65};
  auto cond = [](const std::vector<double>& p) { return shannon(p) - shannon({p[0] + p[1], p[2] + p[3]}); };
  std::vector<double> mix(4);
  for (int i = 0; i < 4; ++i) mix[i] = x[0] * joint[0][i] + x[1] * joint[1][i];
  const double want = cond(mix) - x[0] * cond(joint[0]) - x[1] * cond(joint[1]);
  const double got = check_concavity(ConditionalEntropyF{{2, 2}},
                                     {DensityMatrix(diag(joint[0])), DensityMatrix(diag(joint[1]))}, x);
  CHECK(got == doctest::Approx(want).epsilon(1e-12));

  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<DensityMatrix> states, small;
    for (std::size_t j = 0; j < n; ++j) {
      states.push_back(random_density(4, rng));
      small.push_back(random_density(3, rng));
    }
    const std::vector<double> w = random_simplex(n, rng);
    worst = std::min({worst, check_concavity(ConditionalEntropyF{{2, 2}}, states, w),
                      check_concavity(EntropyDiffF{random_cptp(3, 2, rng)}, small, w)});
  }
  CHECK(worst >= -1e-9);
}

TEST_CASE("pure state lemmas") {
  Rng rng(10);
  const PureStateLemmas prod =
      check_pure_state_lemmas(tensor_vector(random_unit_vector(2, rng), random_unit_vector(3, rng)), {2, 3});
  CHECK(prod.spectra_distance <= 1e-12);
  CHECK(prod.entropy_gap <= 1e-12);

  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::numbers::sqrt2;
  const PureStateLemmas b = check_pure_state_lemmas(bell, {2, 2});
  CHECK(b.spectra_distance <= 1e-15);
  CHECK(b.entropy_gap <= 1e-15);
  const auto half = oracle::eig(oracle::ptrace(ComplexMatrix(bell * bell.adjoint()), {2, 2}, {0})).eigenvalues();
  CHECK(half(0) == doctest::Approx(0.5));
  CHECK(half(1) == doctest::Approx(0.5));

  for (int trial = 0; trial < 100; ++trial) {
    const PureStateLemmas r = check_pure_state_lemmas(random_unit_vector(15, rng), {3, 5});
    CHECK(r.spectra_distance <= 1e-10);
    CHECK(r.entropy_gap <= 1e-9);
  }
  CHECK_THROWS_AS(check_pure_state_lemmas(bell, {2, 3}), DimensionError);
}

TEST_CASE("adjoint quadratic form") {
  Rng rng(11);
  const PsdPair pq = random_kernel_compatible_pair(3, 3, 3, rng);
  const ComplexMatrix a = random_gaussian_matrix(3, 3, rng);
  const KrausMap u = KrausMap::unitary(random_unitary(3, rng));
  CHECK(std::abs(check_adjoint_quadratic(u, pq.p, pq.q, a, 0.8)) <= 1e-10);

  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const PsdPair r = random_kernel_compatible_pair(d, d, d, rng);
    worst = std::min(worst, check_adjoint_quadratic(random_cptp(d, 1 + trial % 3, rng), r.p, r.q,
                                                    random_gaussian_matrix(d, d, rng), rng.uniform(0.0, 5.0)));
  }
  CHECK(worst >= -1e-9);
}
