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

#include "entropion/superop.hpp"

#include <algorithm>
#include <string>

namespace entropion {

ComplexMatrix left_mul(const ComplexMatrix& p, const ComplexMatrix& x) {
  if (p.cols() != x.rows()) throw DimensionError("left_mul: shape mismatch");
  return p * x;
}

ComplexMatrix right_mul(const ComplexMatrix& p, const ComplexMatrix& x) {
  if (x.cols() != p.rows()) throw DimensionError("right_mul: shape mismatch");
  return x * p;
}

SuperOpSpec::SuperOpSpec(const HermitianMatrix& left, const HermitianMatrix& right, double t) : t_(t) {
  if (left.dim() != right.dim()) throw DimensionError("SuperOpSpec: left and right differ in dimension");
  if (!(t >= 0.0)) throw InvariantError("SuperOpSpec: t must be nonnegative");
  auto cache = std::make_shared<Cache>(Cache{left, right, hermitian_eig(left), hermitian_eig(right)});
  const auto psd = [](const HermitianMatrix& m, const Spectrum& s, const char* what) {
    if (s.values(0) < -kSuperOpPsdTol * std::max(1.0, max_abs(m)))
      throw InvariantError(std::string("SuperOpSpec: ") + what + " is not PSD");
  };
  psd(cache->left, cache->left_spec, "left operand");
  psd(cache->right, cache->right_spec, "right operand");
  cache_ = std::move(cache);
}

SuperOpSpec SuperOpSpec::with_t(double t) const {
  if (!(t >= 0.0)) throw InvariantError("SuperOpSpec: t must be nonnegative");
  return SuperOpSpec(cache_, t);
}

bool SuperOpSpec::in_joint_kernel(Eigen::Index m, Eigen::Index n) const {
  const double scale = std::max(left_spectrum().max_value(), 0.0) + t_ * std::max(right_spectrum().max_value(), 0.0);
  const double denom = left_spectrum().values(m) + t_ * right_spectrum().values(n);
  return denom <= kJointKernelEta * scale;
}

ComplexMatrix SuperOpSpec::apply(const ComplexMatrix& x) const {
  return left_mul(left(), x) + t_ * right_mul(right(), x);
}

ComplexMatrix solve_resolvent(const SuperOpSpec& spec, const ComplexMatrix& x) {
  const auto d = static_cast<Eigen::Index>(spec.dim());
  if (x.rows() != d || x.cols() != d) throw DimensionError("solve_resolvent: shape mismatch");
  const Spectrum& ls = spec.left_spectrum();
  const Spectrum& rs = spec.right_spectrum();

  ComplexMatrix xt = ls.vectors.adjoint() * x * rs.vectors;
  const double obstruction = kKernelObstructionTol * std::max(1.0, max_abs(x));
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) {
      if (spec.in_joint_kernel(m, n)) {
        if (std::abs(xt(m, n)) > obstruction)
          throw KernelObstruction("solve_resolvent: right-hand side has component " +
                                  std::to_string(std::abs(xt(m, n))) + " on the joint kernel");
        xt(m, n) = 0.0;
      } else {
        xt(m, n) /= ls.values(m) + spec.t() * rs.values(n);
      }
    }
  }
  return ls.vectors * xt * rs.vectors.adjoint();
}

double resolvent_quadratic_form(const SuperOpSpec& spec, const ComplexMatrix& x) {
  return hs_inner(x, solve_resolvent(spec, x)).real();
}

ComplexMatrix superop_matrix(const SuperOpSpec& spec) {
  const auto d = static_cast<Eigen::Index>(spec.dim());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return tensor(spec.left().matrix(), id) + spec.t() * tensor(id, spec.right().matrix().transpose());
}

ComplexVector vec(const ComplexMatrix& x) {
  ComplexVector v(x.size());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(v.size()) != rows * cols) throw DimensionError("unvec: size mismatch");
  ComplexMatrix x(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = v(i * x.cols() + j);
  return x;
}

}  // namespace entropion
