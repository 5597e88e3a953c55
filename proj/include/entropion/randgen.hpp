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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entropion/matcore.hpp"

namespace entropion {

class KrausMap;
class Povm;
class Ensemble;

/// Reproducible random stream. The algorithm is fixed so that any
/// implementation can regenerate the same instances:
///
///   splitmix64(x): x += 0x9E3779B97F4A7C15;
///                  z = x;
///                  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///                  z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
///                  return z ^ (z >> 31);
///   state0 = splitmix64(seed), replaced by 0x9E3779B97F4A7C15 if zero
///   next():  x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
///            return x * 0x2545F4914F6CDD1D          (xorshift64*)
///   uniform(): ((next() >> 11) + 0.5) * 2^-53       in (0, 1)
///   normal():  Box-Muller on two uniforms u1, u2:
///              sqrt(-2 ln u1) * cos(2 pi u2); the sine branch is discarded
///   complex_normal(): (normal() + i normal()) / sqrt(2)
///   for_trial(seed, i): Rng(splitmix64(seed ^ splitmix64(i)))
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial_index);
  static std::uint64_t splitmix64(std::uint64_t x);

  std::uint64_t next_u64();
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t uniform_int(std::size_t lo, std::size_t hi);
  double normal();
  Complex complex_normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  std::uint64_t position_ = 0;
};

/// rows x cols matrix of independent complex normals, row-major fill order.
ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// G G^dagger / Tr(G G^dagger) with G a d x rank complex Gaussian matrix.
DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng);
DensityMatrix random_density(std::size_t d, Rng& rng);
ComplexVector random_unit_vector(std::size_t d, Rng& rng);

/// Gram-Schmidt on the columns of a rows x cols Gaussian matrix, then each
/// column multiplied by a phase so that its diagonal entry is real positive.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix random_unitary(std::size_t d, Rng& rng);

/// Random Hermitian matrix (G + G^dagger) / 2.
HermitianMatrix random_hermitian(std::size_t d, Rng& rng);

/// PSD pair (P, Q) with ker(Q) a subspace of ker(P): Q has rank q_rank and P is
/// built inside range(Q) with rank at most p_rank. Both have unit trace.
struct PsdPair {
  HermitianMatrix p;
  HermitianMatrix q;
};
PsdPair random_kernel_compatible_pair(std::size_t d, std::size_t p_rank, std::size_t q_rank, Rng& rng);

/// Weights drawn uniformly, normalized; entries below 1e-12 are clamped to 0
/// and the vector renormalized.
std::vector<double> random_simplex(std::size_t n, Rng& rng);
/// Dirichlet(1, ..., 1) weights, strictly positive.
std::vector<double> random_dirichlet(std::size_t n, Rng& rng);

/// Random isometry from d to d * n_kraus cut into n_kraus stacked d x d blocks.
KrausMap random_cptp(std::size_t d, std::size_t n_kraus, Rng& rng);
/// n_eff random PSD effects M_a = G G^dagger normalized as S^{-1/2} M_a S^{-1/2}.
Povm random_povm(std::size_t d, std::size_t n_eff, Rng& rng);
Ensemble random_ensemble(std::size_t d, std::size_t n, std::size_t rank, Rng& rng);

}  // namespace entropion
