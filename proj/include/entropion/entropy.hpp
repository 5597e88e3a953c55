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
#include <limits>
#include <vector>

#include "entropion/matcore.hpp"
#include "entropion/quadrature.hpp"

namespace entropion {

/// Entropy-like quantity in nats, or +infinity. Infinity is an ordinary value
/// here: it signals ker(Q) not contained in ker(P) and callers classify it.
class EntropyValue {
 public:
  constexpr EntropyValue() = default;
  constexpr explicit EntropyValue(double v) : value_(v) {}
  static constexpr EntropyValue infinite() { return EntropyValue(std::numeric_limits<double>::infinity()); }

  constexpr bool is_finite() const { return value_ != std::numeric_limits<double>::infinity(); }
  constexpr double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// -sum lambda ln lambda with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);
/// Same formula for any PSD matrix (trace need not be one).
double von_neumann_entropy(const HermitianMatrix& m);

/// Support leakage above which ker(Q) is not contained in ker(P):
/// <psi|P|psi> > kSupportLeakTol * max(1, lambda_max(P)) for some kernel
/// vector psi of Q.
inline constexpr double kSupportLeakTol = 1e-10;

/// H(P, Q) = Tr P (ln P - ln Q), computed on supports; +infinity when
/// ker(Q) is not contained in ker(P). Note the sign: this is the convention
/// under which H(P, Q) >= Tr P - Tr Q (Klein).
EntropyValue relative_entropy(const HermitianMatrix& p, const HermitianMatrix& q);

/// Tr(P - Q) + int_0^inf Tr (Q - P)(L_Q + t R_P)^{-1}(Q - P) (1 + t)^{-2} dt,
/// each integrand value obtained from solve_resolvent. Throws
/// KernelObstruction when ker(Q) is not contained in ker(P).
EntropyValue relative_entropy_integral(const HermitianMatrix& p, const HermitianMatrix& q,
                                       const QuadratureConfig& cfg = {});

/// The same integral on a fixed composite rule of `panels` equal panels
/// (10-point Gauss-Legendre each); used for convergence studies.
EntropyValue relative_entropy_integral_fixed(const HermitianMatrix& p, const HermitianMatrix& q, std::size_t panels);

/// int_0^inf (a + t b)^{-1} (1 + t)^{-2} dt for a, b > 0.
double kernel_k(double a, double b);

/// Tr(P - Q) + sum_mn |(U^dagger (Q - P) V)_mn|^2 k(q_m, p_n), U and V the
/// eigenbases of Q and P.
EntropyValue relative_entropy_spectral_kernel(const HermitianMatrix& p, const HermitianMatrix& q);

struct ScalarLogIdentity {
  double lhs;   // -ln w
  double rhs1;  // int [1/(w + t) - 1/(1 + t)] dt
  double rhs2;  // (1 - w) + int (w - 1)^2 / ((w + t)(1 + t)^2) dt
};
ScalarLogIdentity scalar_log_identity(double w, const QuadratureConfig& cfg = {});

/// S(rho_AB) - S(rho_A), A the first factor.
double conditional_entropy(const DensityMatrix& rho_ab, const std::vector<std::size_t>& dims);
/// -H(rho_AB, rho_A (x) I/d_B) + ln d_B.
double conditional_entropy_via_relative_entropy(const DensityMatrix& rho_ab, const std::vector<std::size_t>& dims);

/// Tr (Q - P)(L_P + R_Q)^{-1}(Q - P), pseudo-inverse on the joint kernel.
double quadratic_relent(const HermitianMatrix& p, const HermitianMatrix& q);
/// sqrt(2 (1 - Tr (sqrt(P) Q sqrt(P))^{1/2})), clamped at zero.
double bures_distance(const DensityMatrix& p, const DensityMatrix& q);

/// -sum p ln p for a probability vector.
double shannon_entropy(const std::vector<double>& probs);

}  // namespace entropion
