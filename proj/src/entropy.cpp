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

#include "entropion/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "entropion/superop.hpp"

namespace entropion {

namespace {

void require_same_dim(const HermitianMatrix& p, const HermitianMatrix& q, const char* who) {
  if (p.dim() != q.dim())
    throw DimensionError(std::string(who) + ": dimension mismatch (" + std::to_string(p.dim()) + " vs " +
                         std::to_string(q.dim()) + ")");
}

void require_psd_spectrum(const Spectrum& s, const HermitianMatrix& m, const char* who) {
  if (s.values(0) < -kDensityEigTol * std::max(1.0, max_abs(m)))
    throw InvariantError(std::string(who) + ": argument is not positive semi-definite");
}

double entropy_from_spectrum(const Spectrum& s) {
  const double scale = s.max_value();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    const double lambda = s.values(k);
    if (lambda <= kKernelEta * scale) continue;
    sum -= lambda * std::log(lambda);
  }
  return sum;
}

// True when some kernel vector u of Q carries <u|P|u> above the leak threshold.
bool support_violated(const Spectrum& q_spec, const HermitianMatrix& p, double p_max) {
  const double q_scale = q_spec.max_value();
  const double leak = kSupportLeakTol * std::max(1.0, p_max);
  for (Eigen::Index j = 0; j < q_spec.values.size(); ++j) {
    if (q_spec.values(j) > kKernelEta * q_scale) continue;
    const auto u = q_spec.vectors.col(j);
    const double weight = (u.adjoint() * p.matrix() * u)(0, 0).real();
    if (weight > leak) return true;
  }
  return false;
}

// kappa(r) = (r ln r - r + 1) / (r - 1)^2, so that k(a, b) = kappa(b / a) / a.
// Near r = 1 the closed form cancels catastrophically; the series
// kappa(1 + x) = sum_{n>=2} (-1)^n x^{n-2} / (n (n - 1)) is used instead.
double kappa(double r) {
  if (r == 0.0) return 1.0;
  const double x = r - 1.0;
  if (std::abs(x) < 0.1) {
    double sum = 0.0;
    double power = 1.0;
    for (int n = 2; n <= 32; ++n) {
      const double term = power / (n * (n - 1.0));
      sum += (n % 2 == 0) ? term : -term;
      power *= x;
    }
    return sum;
  }
  return ((1.0 + x) * std::log1p(x) - x) / (x * x);
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_from_spectrum(rho.spectrum()); }

double von_neumann_entropy(const HermitianMatrix& m) {
  const Spectrum s = hermitian_eig(m);
  require_psd_spectrum(s, m, "von_neumann_entropy");
  return entropy_from_spectrum(s);
}

double shannon_entropy(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs)
    if (p > 0.0) sum -= p * std::log(p);
  return sum;
}

EntropyValue relative_entropy(const HermitianMatrix& p, const HermitianMatrix& q) {
  require_same_dim(p, q, "relative_entropy");
  const Spectrum ps = hermitian_eig(p);
  const Spectrum qs = hermitian_eig(q);
  require_psd_spectrum(ps, p, "relative_entropy");
  require_psd_spectrum(qs, q, "relative_entropy");

  const double p_max = ps.max_value();
  if (support_violated(qs, p, p_max)) return EntropyValue::infinite();

  double p_log_p = 0.0;
  for (Eigen::Index i = 0; i < ps.values.size(); ++i) {
    const double lambda = ps.values(i);
    if (lambda > kKernelEta * p_max) p_log_p += lambda * std::log(lambda);
  }

  // Tr P ln Q = sum_j <psi_j|P|psi_j> ln q_j over the support of Q.
  const ComplexMatrix overlaps = qs.vectors.adjoint() * p.matrix() * qs.vectors;
  const double q_max = qs.max_value();
  double p_log_q = 0.0;
  for (Eigen::Index j = 0; j < qs.values.size(); ++j) {
    const double lambda = qs.values(j);
    if (lambda <= kKernelEta * q_max) continue;
    p_log_q += overlaps(j, j).real() * std::log(lambda);
  }
  return EntropyValue(p_log_p - p_log_q);
}

namespace {

// s -> <Q - P, (L_Q + t R_P)^{-1}(Q - P)> with t = s / (1 - s); the weight
// (1 + t)^{-2} cancels the Jacobian of the substitution.
std::function<double(double)> integrand_on_unit_interval(const HermitianMatrix& p, const HermitianMatrix& q,
                                                         const char* who) {
  require_same_dim(p, q, who);
  const SuperOpSpec base(q, p, 0.0);
  if (support_violated(base.left_spectrum(), p, base.right_spectrum().max_value()))
    throw KernelObstruction(std::string(who) + ": ker(Q) is not contained in ker(P)");
  ComplexMatrix diff = q.matrix() - p.matrix();
  return [base, diff = std::move(diff)](double s) {
    return resolvent_quadratic_form(base.with_t(s / (1.0 - s)), diff);
  };
}

}  // namespace

EntropyValue relative_entropy_integral(const HermitianMatrix& p, const HermitianMatrix& q,
                                       const QuadratureConfig& cfg) {
  const auto integrand = integrand_on_unit_interval(p, q, "relative_entropy_integral");
  const QuadratureResult r = integrate_adaptive(integrand, 0.0, 1.0, cfg);
  return EntropyValue(p.trace() - q.trace() + r.value);
}

EntropyValue relative_entropy_integral_fixed(const HermitianMatrix& p, const HermitianMatrix& q, std::size_t panels) {
  const auto integrand = integrand_on_unit_interval(p, q, "relative_entropy_integral_fixed");
  return EntropyValue(p.trace() - q.trace() + integrate_uniform(integrand, 0.0, 1.0, panels));
}

double kernel_k(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("kernel_k: arguments must be positive (got " + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
  return kappa(b / a) / a;
}

EntropyValue relative_entropy_spectral_kernel(const HermitianMatrix& p, const HermitianMatrix& q) {
  require_same_dim(p, q, "relative_entropy_spectral_kernel");
  const Spectrum qs = hermitian_eig(q);
  const Spectrum ps = hermitian_eig(p);
  require_psd_spectrum(ps, p, "relative_entropy_spectral_kernel");
  require_psd_spectrum(qs, q, "relative_entropy_spectral_kernel");
  if (support_violated(qs, p, ps.max_value()))
    throw KernelObstruction("relative_entropy_spectral_kernel: ker(Q) is not contained in ker(P)");

  const ComplexMatrix xt = qs.vectors.adjoint() * (q.matrix() - p.matrix()) * ps.vectors;
  const double q_max = qs.max_value();
  const double p_max = ps.max_value();
  double sum = 0.0;
  for (Eigen::Index m = 0; m < xt.rows(); ++m) {
    const double qm = qs.values(m);
    if (qm <= kKernelEta * q_max) continue;  // row vanishes by the support condition
    for (Eigen::Index n = 0; n < xt.cols(); ++n) {
      const double pn = ps.values(n) <= kKernelEta * p_max ? 0.0 : ps.values(n);
      sum += std::norm(xt(m, n)) * kappa(pn / qm) / qm;
    }
  }
  return EntropyValue(p.trace() - q.trace() + sum);
}

ScalarLogIdentity scalar_log_identity(double w, const QuadratureConfig& cfg) {
  if (!(w > 0.0)) throw DomainError("scalar_log_identity: w must be positive");
  // 1/(w + t) - 1/(1 + t) written as a single fraction to avoid cancellation.
  const auto first = [w](double t) { return (1.0 - w) / ((w + t) * (1.0 + t)); };
  const auto second = [w](double t) { return (w - 1.0) * (w - 1.0) / ((w + t) * (1.0 + t) * (1.0 + t)); };
  return {-std::log(w), integrate_half_line(first, cfg).value,
          (1.0 - w) + integrate_half_line(second, cfg).value};
}

double conditional_entropy(const DensityMatrix& rho_ab, const std::vector<std::size_t>& dims) {
  if (dims.size() != 2) throw DimensionError("conditional_entropy: expected two factor dimensions");
  const DensityMatrix rho_a = partial_trace(rho_ab, dims, {0});
  return von_neumann_entropy(rho_ab) - von_neumann_entropy(rho_a);
}

double conditional_entropy_via_relative_entropy(const DensityMatrix& rho_ab, const std::vector<std::size_t>& dims) {
  if (dims.size() != 2) throw DimensionError("conditional_entropy: expected two factor dimensions");
  const DensityMatrix rho_a = partial_trace(rho_ab, dims, {0});
  const auto db = static_cast<Eigen::Index>(dims[1]);
  const ComplexMatrix gamma = tensor(rho_a.matrix(), ComplexMatrix(ComplexMatrix::Identity(db, db) / double(db)));
  const EntropyValue h = relative_entropy(rho_ab, HermitianMatrix::hermitian_part(gamma));
  return -h.value() + std::log(static_cast<double>(dims[1]));
}

double quadratic_relent(const HermitianMatrix& p, const HermitianMatrix& q) {
  require_same_dim(p, q, "quadratic_relent");
  const SuperOpSpec spec(p, q, 1.0);
  return resolvent_quadratic_form(spec, q.matrix() - p.matrix());
}

double bures_distance(const DensityMatrix& p, const DensityMatrix& q) {
  require_same_dim(p, q, "bures_distance");
  const HermitianMatrix root = sqrt_psd(p);
  const Spectrum s = hermitian_eig(HermitianMatrix::hermitian_part(root.matrix() * q.matrix() * root.matrix()));
  double fidelity_root = 0.0;
  for (Eigen::Index k = 0; k < s.values.size(); ++k) fidelity_root += std::sqrt(std::max(s.values(k), 0.0));
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - fidelity_root)));
}

}  // namespace entropion
