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

#include "entropion/randgen.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entropion/channels.hpp"
#include "entropion/holevo.hpp"

namespace entropion {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Rng::splitmix64(std::uint64_t x) {
  x += kGolden;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), state_(splitmix64(seed)) {
  if (state_ == 0) state_ = kGolden;
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial_index) {
  return Rng(splitmix64(seed ^ splitmix64(trial_index)));
}

std::uint64_t Rng::next_u64() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  ++position_;
  return state_ * 0x2545F4914F6CDD1DULL;
}

double Rng::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) {
  const std::size_t span = hi - lo + 1;
  return lo + static_cast<std::size_t>(uniform() * static_cast<double>(span)) % span;
}

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::numbers::sqrt2;
}

ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_normal();
  return g;
}

DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > d)
    throw InvariantError("random_density: rank " + std::to_string(rank) + " outside [1, " + std::to_string(d) + "]");
  const ComplexMatrix g = random_gaussian_matrix(d, rank, rng);
  const ComplexMatrix m = g * g.adjoint();
  return DensityMatrix(HermitianMatrix::hermitian_part(m / m.trace().real()));
}

DensityMatrix random_density(std::size_t d, Rng& rng) { return random_density(d, d, rng); }

ComplexVector random_unit_vector(std::size_t d, Rng& rng) {
  ComplexVector v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw DimensionError("random_isometry: need cols <= rows");
  ComplexMatrix v = random_gaussian_matrix(rows, cols, rng);
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index k = 0; k < j; ++k) v.col(j) -= v.col(k) * v.col(k).dot(v.col(j));
    v.col(j) /= v.col(j).norm();
    const Complex diag = v(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) v.col(j) *= std::conj(diag) / mag;
  }
  return v;
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) { return random_isometry(d, d, rng); }

HermitianMatrix random_hermitian(std::size_t d, Rng& rng) {
  return HermitianMatrix::hermitian_part(random_gaussian_matrix(d, d, rng));
}

PsdPair random_kernel_compatible_pair(std::size_t d, std::size_t p_rank, std::size_t q_rank, Rng& rng) {
  if (q_rank < 1 || q_rank > d || p_rank < 1) throw InvariantError("random_kernel_compatible_pair: bad ranks");
  const ComplexMatrix gq = random_gaussian_matrix(d, q_rank, rng);
  const ComplexMatrix h = random_gaussian_matrix(q_rank, std::min(p_rank, q_rank), rng);
  const ComplexMatrix q = gq * gq.adjoint();
  const ComplexMatrix gp = gq * h;
  const ComplexMatrix p = gp * gp.adjoint();
  return {HermitianMatrix::hermitian_part(p / p.trace().real()),
          HermitianMatrix::hermitian_part(q / q.trace().real())};
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) sum += (x = rng.uniform());
  for (auto& x : w) x /= sum;
  sum = 0.0;
  for (auto& x : w) {
    if (x < 1e-12) x = 0.0;
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return w;
}

std::vector<double> random_dirichlet(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) sum += (x = -std::log(rng.uniform()));
  for (auto& x : w) x /= sum;
  return w;
}

KrausMap random_cptp(std::size_t d, std::size_t n_kraus, Rng& rng) {
  if (d == 0 || n_kraus == 0) throw InvariantError("random_cptp: counts must be positive");
  const ComplexMatrix v = random_isometry(d * n_kraus, d, rng);
  std::vector<ComplexMatrix> ops;
  const auto n = static_cast<Eigen::Index>(d);
  for (std::size_t a = 0; a < n_kraus; ++a) ops.emplace_back(v.block(static_cast<Eigen::Index>(a) * n, 0, n, n));
  return KrausMap(std::move(ops));
}

Povm random_povm(std::size_t d, std::size_t n_eff, Rng& rng) {
  if (d == 0 || n_eff == 0) throw InvariantError("random_povm: counts must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<ComplexMatrix> raw;
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (std::size_t a = 0; a < n_eff; ++a) {
    const ComplexMatrix g = random_gaussian_matrix(d, d, rng);
    raw.push_back(g * g.adjoint());
    sum += raw.back();
  }
  const HermitianMatrix inv_root =
      matrix_function(HermitianMatrix::hermitian_part(sum), [](double x) { return 1.0 / std::sqrt(x); });
  std::vector<HermitianMatrix> effects;
  for (const auto& m : raw)
    effects.push_back(HermitianMatrix::hermitian_part(inv_root.matrix() * m * inv_root.matrix()));
  return Povm(std::move(effects));
}

Ensemble random_ensemble(std::size_t d, std::size_t n, std::size_t rank, Rng& rng) {
  std::vector<double> weights = random_dirichlet(n, rng);
  std::vector<DensityMatrix> states;
  states.reserve(n);
  for (std::size_t j = 0; j < n; ++j) states.push_back(random_density(d, rank, rng));
  return Ensemble(std::move(weights), std::move(states));
}

}  // namespace entropion
