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

#include "entropion/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace entropion {

namespace {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the unitary J = diag(1, e^{-i phi}) R(theta), where
// a(p,q) = r e^{i phi}; the phase makes the pivot real so the classic real
// Jacobi rotation applies. A <- J^dagger A J, V <- V J.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase_conj = std::conj(apq / r);

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase_conj;
  const Complex jqq = c * phase_conj;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

std::size_t checked_product(const std::vector<std::size_t>& dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionError("tensor factor dimension must be positive");
    total *= d;
  }
  return total;
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) best = std::max(best, std::abs(m.data()[i]));
  return best;
}

double Spectrum::max_value() const { return values.size() == 0 ? 0.0 : values.maxCoeff(); }

double Spectrum::max_abs_value() const {
  return values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
}

ComplexMatrix Spectrum::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

// ---------------------------------------------------------------------------
// HermitianMatrix / DensityMatrix

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionError("Hermitian matrix must be square and non-empty, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (!all_finite(m)) throw InvariantError("matrix has non-finite entries");
  const double asym = max_abs(m - m.adjoint());
  if (asym > kHermitianTol * std::max(1.0, max_abs(m)))
    throw InvariantError("matrix is not Hermitian (max |M - M^dagger| = " + std::to_string(asym) + ")");
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::hermitian_part(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionError("Hermitian part requires a square matrix");
  if (!all_finite(m)) throw InvariantError("matrix has non-finite entries");
  return HermitianMatrix(ComplexMatrix(0.5 * (m + m.adjoint())), Unchecked{});
}

HermitianMatrix HermitianMatrix::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return HermitianMatrix(ComplexMatrix::Identity(n, n), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return HermitianMatrix(m);
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : DensityMatrix(HermitianMatrix(m)) {}

DensityMatrix::DensityMatrix(const HermitianMatrix& m) : HermitianMatrix(m) {
  const double tr = trace();
  if (std::abs(tr - 1.0) > kDensityTraceTol)
    throw InvariantError("density matrix trace is " + std::to_string(tr) + ", expected 1");
  spectrum_ = hermitian_eig(*this);
  if (spectrum_.values(0) < -kDensityEigTol)
    throw InvariantError("density matrix has negative eigenvalue " +
                         std::to_string(spectrum_.values(0)));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-12) throw InvariantError("pure state vector must have unit norm");
  return DensityMatrix(HermitianMatrix::hermitian_part(psi * psi.adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(d)));
}

// ---------------------------------------------------------------------------
// Spectral machinery

Spectrum hermitian_eig(const HermitianMatrix& m, const EigenSolverOptions& opts) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double threshold = opts.off_diagonal_tol * a.norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweeps == opts.max_sweeps)
      throw NonConvergence("Jacobi eigensolver did not converge in " + std::to_string(opts.max_sweeps) +
                           " sweeps");
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });

  Spectrum out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

bool KernelPolicy::is_kernel(double lambda, double scale) const {
  return std::abs(lambda) <= eta * scale;
}

HermitianMatrix matrix_function(const Spectrum& spec, const RealFunction& f, KernelPolicy policy) {
  const auto n = static_cast<Eigen::Index>(spec.dim());
  const double scale = spec.max_abs_value();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double lambda = spec.values(k);
    if (policy.is_kernel(lambda, scale)) {
      if (policy.mode == KernelPolicy::Mode::support) continue;
      lambda = 0.0;
    }
    const double fk = f(lambda);
    if (!std::isfinite(fk))
      throw DomainError("matrix function undefined at eigenvalue " + std::to_string(lambda));
    if (fk == 0.0) continue;
    const auto u = spec.vectors.col(k);
    out.noalias() += fk * (u * u.adjoint());
  }
  return HermitianMatrix::hermitian_part(out);
}

HermitianMatrix matrix_function(const HermitianMatrix& m, const RealFunction& f, KernelPolicy policy) {
  return matrix_function(hermitian_eig(m), f, policy);
}

HermitianMatrix pseudo_inverse(const HermitianMatrix& m, KernelPolicy policy) {
  return matrix_function(m, [](double x) { return 1.0 / x; }, policy);
}

HermitianMatrix sqrt_psd(const HermitianMatrix& m) {
  return matrix_function(m, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

double min_eigenvalue(const HermitianMatrix& m) { return hermitian_eig(m).values(0); }

double max_eigenvalue(const HermitianMatrix& m) {
  const Spectrum s = hermitian_eig(m);
  return s.values(s.values.size() - 1);
}

void require_psd(const HermitianMatrix& m, double tol, const char* what) {
  const double lo = min_eigenvalue(m);
  if (lo < -tol * std::max(1.0, max_abs(m)))
    throw InvariantError(std::string(what) + " is not positive semi-definite (min eigenvalue " +
                         std::to_string(lo) + ")");
}

// ---------------------------------------------------------------------------
// Products and reductions

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hs_inner: shape mismatch");
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) sum += std::conj(a.data()[i]) * b.data()[i];
  return sum;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) return ComplexMatrix::Identity(1, 1);
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = tensor(out, factors[k]);
  return out;
}

ComplexVector tensor_vector(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  const std::size_t total = checked_product(dims);
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != total)
    throw DimensionError("partial_trace: product of dims (" + std::to_string(total) +
                         ") does not match matrix dimension " + std::to_string(m.rows()));
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw DimensionError("partial_trace: keep index out of range");
    if (kept[k]) throw DimensionError("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  // Split each full index into (kept part, traced part), both row-major over
  // the respective factor subsets in original order.
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  for (std::size_t f = 0; f < dims.size(); ++f) (kept[f] ? kept_dim : traced_dim) *= dims[f];

  std::vector<std::size_t> kept_of(total), traced_of(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::size_t kpart = 0, tpart = 0, kscale = 1, tscale = 1;
    for (std::size_t f = dims.size(); f-- > 0;) {
      const std::size_t digit = rem % dims[f];
      rem /= dims[f];
      if (kept[f]) {
        kpart += digit * kscale;
        kscale *= dims[f];
      } else {
        tpart += digit * tscale;
        tscale *= dims[f];
      }
    }
    kept_of[idx] = kpart;
    traced_of[idx] = tpart;
  }

  std::vector<std::vector<std::size_t>> by_traced(traced_dim);
  for (std::size_t idx = 0; idx < total; ++idx) by_traced[traced_of[idx]].push_back(idx);

  const auto n = static_cast<Eigen::Index>(kept_dim);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& group : by_traced)
    for (std::size_t i : group)
      for (std::size_t j : group)
        out(static_cast<Eigen::Index>(kept_of[i]), static_cast<Eigen::Index>(kept_of[j])) +=
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  return DensityMatrix(HermitianMatrix::hermitian_part(partial_trace(rho.matrix(), dims, keep)));
}

ComplexMatrix basis_projector(std::size_t d, std::size_t k) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  p(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
  return p;
}

ComplexVector basis_vector(std::size_t d, std::size_t k) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(k)) = 1.0;
  return v;
}

}  // namespace entropion
