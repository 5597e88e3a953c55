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

#include <memory>

#include "entropion/matcore.hpp"

namespace entropion {

inline constexpr double kSuperOpPsdTol = 1e-10;
inline constexpr double kJointKernelEta = 1e-12;
inline constexpr double kKernelObstructionTol = 1e-10;

/// L_P(X) = P X.
ComplexMatrix left_mul(const ComplexMatrix& p, const ComplexMatrix& x);
/// R_P(X) = X P.
ComplexMatrix right_mul(const ComplexMatrix& p, const ComplexMatrix& x);

/// The superoperator X -> left X + t X right for PSD `left`, `right` and
/// t >= 0. Both spectra are computed once and shared between copies, so
/// rescaling t via with_t() costs nothing.
class SuperOpSpec {
 public:
  SuperOpSpec(const HermitianMatrix& left, const HermitianMatrix& right, double t);

  SuperOpSpec with_t(double t) const;

  std::size_t dim() const { return cache_->left.dim(); }
  double t() const { return t_; }
  const HermitianMatrix& left() const { return cache_->left; }
  const HermitianMatrix& right() const { return cache_->right; }
  const Spectrum& left_spectrum() const { return cache_->left_spec; }
  const Spectrum& right_spectrum() const { return cache_->right_spec; }

  /// Pairs (m, n) with q_m + t p_n <= eta (lambda_max(left) + t lambda_max(right))
  /// form the joint kernel.
  bool in_joint_kernel(Eigen::Index m, Eigen::Index n) const;
  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  struct Cache {
    HermitianMatrix left;
    HermitianMatrix right;
    Spectrum left_spec;
    Spectrum right_spec;
  };
  SuperOpSpec(std::shared_ptr<const Cache> cache, double t) : cache_(std::move(cache)), t_(t) {}

  std::shared_ptr<const Cache> cache_;
  double t_;
};

/// Y = (L_left + t R_right)^{-1} X through the two eigenbases:
/// Y = U [ X~_mn / (q_m + t p_n) ] V^dagger with X~ = U^dagger X V. Joint-kernel
/// entries are set to zero; throws KernelObstruction when such an entry of X~
/// exceeds 1e-10 * max(1, ||X||_max).
ComplexMatrix solve_resolvent(const SuperOpSpec& spec, const ComplexMatrix& x);

/// Tr X^dagger (L_left + t R_right)^{-1} X, real for any X since the
/// superoperator is self-adjoint and PSD.
double resolvent_quadratic_form(const SuperOpSpec& spec, const ComplexMatrix& x);

/// Dense d^2 x d^2 matrix S with S vec(X) = vec(left X + t X right), vec
/// row-major: vec(X)[i d + j] = X_ij. Equals left (x) I + t I (x) right^T.
ComplexMatrix superop_matrix(const SuperOpSpec& spec);

ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, std::size_t rows, std::size_t cols);

}  // namespace entropion
