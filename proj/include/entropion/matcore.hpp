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

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "entropion/errors.hpp"

namespace entropion {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Every index convention in the library
/// (vectorization, tensor products, partial traces) assumes row-major order
/// with the leftmost tensor factor varying slowest.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kDensityEigTol = 1e-10;
inline constexpr double kDensityTraceTol = 1e-10;
inline constexpr double kKernelEta = 1e-12;

double max_abs(const ComplexMatrix& m);

/// Spectral data of a Hermitian matrix: M = U diag(values) U^dagger,
/// eigenvalues ascending, eigenvectors stored as the columns of U.
struct Spectrum {
  RealVector values;
  ComplexMatrix vectors;

  std::size_t dim() const { return static_cast<std::size_t>(values.size()); }
  double max_value() const;
  double max_abs_value() const;
  ComplexMatrix reconstruct() const;
};

/// Square matrix equal to its own adjoint within kHermitianTol (relative).
/// The stored entries are exactly Hermitian: construction keeps the
/// Hermitian part of the input.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  /// Takes (M + M^dagger) / 2 without checking; for operator differences whose
  /// asymmetry is pure rounding.
  static HermitianMatrix hermitian_part(const ComplexMatrix& m);
  static HermitianMatrix identity(std::size_t d);
  static HermitianMatrix diagonal(const std::vector<double>& entries);

  const ComplexMatrix& matrix() const { return m_; }
  operator const ComplexMatrix&() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  double trace() const { return m_.trace().real(); }

 protected:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Positive semi-definite, unit-trace Hermitian matrix. The spectrum is
/// computed once at construction and kept.
class DensityMatrix : public HermitianMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);
  explicit DensityMatrix(const HermitianMatrix& m);

  /// |psi><psi| for a unit vector.
  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(std::size_t d);

  const Spectrum& spectrum() const { return spectrum_; }

 private:
  Spectrum spectrum_;
};

struct EigenSolverOptions {
  int max_sweeps = 100;
  double off_diagonal_tol = 1e-14;
};

/// Cyclic complex Jacobi. Throws NonConvergence when the off-diagonal
/// Frobenius mass is still above off_diagonal_tol * ||M||_F after
/// max_sweeps sweeps.
Spectrum hermitian_eig(const HermitianMatrix& m, const EigenSolverOptions& opts = {});

/// Thresholding of near-zero eigenvalues: |lambda| <= eta * max|lambda| counts
/// as an exact zero. `snap` evaluates f(0) there; `support` drops those
/// eigenvalues from the sum entirely (f restricted to the support).
struct KernelPolicy {
  enum class Mode { snap, support };
  double eta = kKernelEta;
  Mode mode = Mode::snap;

  static KernelPolicy support_only() { return {kKernelEta, Mode::support}; }
  bool is_kernel(double lambda, double scale) const;
};

using RealFunction = std::function<double(double)>;

/// f(M) = sum_k f(lambda_k) |phi_k><phi_k|. Throws DomainError when f returns a
/// non-finite value on an eigenvalue that survives the kernel policy.
HermitianMatrix matrix_function(const HermitianMatrix& m, const RealFunction& f,
                                KernelPolicy policy = {});
HermitianMatrix matrix_function(const Spectrum& spec, const RealFunction& f,
                                KernelPolicy policy = {});

/// Moore-Penrose inverse of a PSD matrix on its support.
HermitianMatrix pseudo_inverse(const HermitianMatrix& m, KernelPolicy policy = KernelPolicy::support_only());
HermitianMatrix sqrt_psd(const HermitianMatrix& m);

double min_eigenvalue(const HermitianMatrix& m);
/// Throws InvariantError naming `what` when min eigenvalue < -tol * max(1, ||M||_max).
void require_psd(const HermitianMatrix& m, double tol, const char* what);
double max_eigenvalue(const HermitianMatrix& m);

/// <A, B> = Tr A^dagger B.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, A index slowest.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors);
ComplexVector tensor_vector(const ComplexVector& a, const ComplexVector& b);

/// Reduced matrix on the factors listed in `keep` (any order; output factor
/// order follows the original factor order).
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

ComplexMatrix basis_projector(std::size_t d, std::size_t k);
ComplexVector basis_vector(std::size_t d, std::size_t k);

}  // namespace entropion
