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
#include <functional>
#include <vector>

#include "entropion/matcore.hpp"

namespace entropion {

inline constexpr double kTracePreservingTol = 1e-10;

/// Completely positive map Phi(X) = sum_j K_j X K_j^dagger, K_j of shape d_out x d_in.
class KrausMap {
 public:
  explicit KrausMap(std::vector<ComplexMatrix> kraus_ops);

  static KrausMap identity(std::size_t d);
  static KrausMap unitary(const ComplexMatrix& u);

  const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }
  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }
  std::size_t size() const { return ops_.size(); }

  /// ||sum_j K_j^dagger K_j - I||_max.
  double trace_preservation_residual() const;
  bool is_trace_preserving() const { return trace_preservation_residual() <= kTracePreservingTol; }

 private:
  std::vector<ComplexMatrix> ops_;
  std::size_t d_in_;
  std::size_t d_out_;
};

/// Effects M_a, each PSD, summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<HermitianMatrix> effects);

  static Povm computational_basis(std::size_t d);
  static Povm trivial(std::size_t d);

  const std::vector<HermitianMatrix>& effects() const { return effects_; }
  std::size_t dim() const { return effects_.front().dim(); }
  std::size_t outcomes() const { return effects_.size(); }

 private:
  std::vector<HermitianMatrix> effects_;
};

/// Stinespring-style dilation: Phi(rho) = Tr_B U (rho (x) |anc><anc|) U^dagger.
struct AncillaRep {
  ComplexMatrix u;
  ComplexVector anc_state;
  std::size_t d_system;
  std::size_t d_ancilla;

  /// U (rho (x) |anc><anc|) U^dagger on system (x) ancilla.
  ComplexMatrix dilate(const ComplexMatrix& rho) const;
  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

ComplexMatrix apply_channel(const KrausMap& phi, const ComplexMatrix& x);
HermitianMatrix apply_channel(const KrausMap& phi, const HermitianMatrix& rho);
DensityMatrix apply_channel(const KrausMap& phi, const DensityMatrix& rho);

/// Kraus operators {K_j^dagger}: the Hilbert-Schmidt adjoint.
KrausMap adjoint_channel(const KrausMap& phi);

/// Diagonal part of a square matrix.
ComplexMatrix dephase(const ComplexMatrix& x);
/// (1/d) sum_j Z^j X Z^{-j}, Z = diag(omega^k), omega = exp(2 pi i / d).
ComplexMatrix dephase_via_z(const ComplexMatrix& x);
/// Dephasing as a channel with Kraus operators |k><k|.
KrausMap dephasing_channel(std::size_t d);

/// rho -> sum_a Tr(rho M_a) |a><a|, realized with Kraus operators
/// K_{a,b} = |a><b| sqrt(M_a).
KrausMap povm_channel(const Povm& m);
/// Outcome probabilities Tr(rho M_a).
std::vector<double> measure(const Povm& m, const ComplexMatrix& rho);

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// sum_{ij} |i><j| (x) Phi(|i><j|).
HermitianMatrix choi_matrix(const KrausMap& phi);
HermitianMatrix choi_matrix(const LinearMap& phi, std::size_t d_in);

struct CptpReport {
  double choi_min_eigenvalue;
  double trace_residual;
  bool completely_positive;
  bool trace_preserving;
  bool ok() const { return completely_positive && trace_preserving; }
};
CptpReport is_cptp(const KrausMap& phi, double tol = 1e-10);

/// Requires a trace-preserving map with d_in == d_out. The dilation uses
/// V = sum_j K_j (x) |j>, completed to a unitary against the standard basis.
AncillaRep ancilla_representation(const KrausMap& phi);

/// sum_k sqrt(lambda_k) |phi_k> (x) |k> over the nonzero eigenvalues in
/// ascending order; the ancilla dimension equals the numerical rank.
ComplexVector purify(const DensityMatrix& rho);

/// Kraus set {K_i (x) L_j}.
KrausMap tensor_channel(const KrausMap& phi, const KrausMap& psi);

}  // namespace entropion
