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

#include "entropion/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace entropion {

KrausMap::KrausMap(std::vector<ComplexMatrix> kraus_ops) : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) throw InvariantError("KrausMap: need at least one Kraus operator");
  d_out_ = static_cast<std::size_t>(ops_.front().rows());
  d_in_ = static_cast<std::size_t>(ops_.front().cols());
  if (d_in_ == 0 || d_out_ == 0) throw DimensionError("KrausMap: empty Kraus operator");
  for (const auto& k : ops_)
    if (static_cast<std::size_t>(k.rows()) != d_out_ || static_cast<std::size_t>(k.cols()) != d_in_)
      throw DimensionError("KrausMap: Kraus operators must share one shape");
}

KrausMap KrausMap::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return KrausMap({ComplexMatrix::Identity(n, n)});
}

KrausMap KrausMap::unitary(const ComplexMatrix& u) { return KrausMap({u}); }

double KrausMap::trace_preservation_residual() const {
  const auto n = static_cast<Eigen::Index>(d_in_);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& k : ops_) sum.noalias() += k.adjoint() * k;
  return max_abs(sum - ComplexMatrix::Identity(n, n));
}

Povm::Povm(std::vector<HermitianMatrix> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw InvariantError("Povm: need at least one effect");
  const std::size_t d = effects_.front().dim();
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& e : effects_) {
    if (e.dim() != d) throw DimensionError("Povm: effects must share one dimension");
    require_psd(e, 1e-10, "Povm effect");
    sum += e.matrix();
  }
  const double residual = max_abs(sum - ComplexMatrix::Identity(n, n));
  if (residual > 1e-10)
    throw InvariantError("Povm: effects do not sum to the identity (residual " + std::to_string(residual) + ")");
}

Povm Povm::computational_basis(std::size_t d) {
  std::vector<HermitianMatrix> effects;
  for (std::size_t k = 0; k < d; ++k) effects.emplace_back(basis_projector(d, k));
  return Povm(std::move(effects));
}

Povm Povm::trivial(std::size_t d) { return Povm({HermitianMatrix::identity(d)}); }

ComplexMatrix AncillaRep::dilate(const ComplexMatrix& rho) const {
  const ComplexMatrix anc = anc_state * anc_state.adjoint();
  return u * tensor(rho, anc) * u.adjoint();
}

ComplexMatrix AncillaRep::apply(const ComplexMatrix& rho) const {
  return partial_trace(dilate(rho), {d_system, d_ancilla}, {0});
}

ComplexMatrix apply_channel(const KrausMap& phi, const ComplexMatrix& x) {
  if (static_cast<std::size_t>(x.rows()) != phi.d_in() || static_cast<std::size_t>(x.cols()) != phi.d_in())
    throw DimensionError("apply_channel: input is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                         ", channel expects " + std::to_string(phi.d_in()));
  const auto n = static_cast<Eigen::Index>(phi.d_out());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& k : phi.kraus_ops()) out.noalias() += k * x * k.adjoint();
  return out;
}

HermitianMatrix apply_channel(const KrausMap& phi, const HermitianMatrix& rho) {
  return HermitianMatrix::hermitian_part(apply_channel(phi, rho.matrix()));
}

DensityMatrix apply_channel(const KrausMap& phi, const DensityMatrix& rho) {
  return DensityMatrix(apply_channel(phi, static_cast<const HermitianMatrix&>(rho)));
}

KrausMap adjoint_channel(const KrausMap& phi) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(phi.size());
  for (const auto& k : phi.kraus_ops()) ops.emplace_back(k.adjoint());
  return KrausMap(std::move(ops));
}

ComplexMatrix dephase(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) throw DimensionError("dephase: square matrix required");
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  out.diagonal() = x.diagonal();
  return out;
}

ComplexMatrix dephase_via_z(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) throw DimensionError("dephase_via_z: square matrix required");
  const Eigen::Index d = x.rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    ComplexMatrix zj = ComplexMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k)
      zj(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(d));
    sum.noalias() += zj * x * zj.adjoint();
  }
  return sum / static_cast<double>(d);
}

KrausMap dephasing_channel(std::size_t d) {
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < d; ++k) ops.push_back(basis_projector(d, k));
  return KrausMap(std::move(ops));
}

KrausMap povm_channel(const Povm& m) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  const auto n = static_cast<Eigen::Index>(m.outcomes());
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(n * d));
  for (Eigen::Index a = 0; a < n; ++a) {
    const HermitianMatrix root = sqrt_psd(m.effects()[static_cast<std::size_t>(a)]);
    for (Eigen::Index b = 0; b < d; ++b) {
      ComplexMatrix k = ComplexMatrix::Zero(n, d);
      k.row(a) = root.matrix().row(b);
      ops.push_back(std::move(k));
    }
  }
  return KrausMap(std::move(ops));
}

std::vector<double> measure(const Povm& m, const ComplexMatrix& rho) {
  if (static_cast<std::size_t>(rho.rows()) != m.dim()) throw DimensionError("measure: dimension mismatch");
  std::vector<double> probs;
  probs.reserve(m.outcomes());
  for (const auto& e : m.effects()) probs.push_back((rho * e.matrix()).trace().real());
  return probs;
}

HermitianMatrix choi_matrix(const LinearMap& phi, std::size_t d_in) {
  const auto n = static_cast<Eigen::Index>(d_in);
  ComplexMatrix out;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      ComplexMatrix eij = ComplexMatrix::Zero(n, n);
      eij(i, j) = 1.0;
      const ComplexMatrix image = phi(eij);
      if (out.size() == 0) out = ComplexMatrix::Zero(n * image.rows(), n * image.cols());
      out.block(i * image.rows(), j * image.cols(), image.rows(), image.cols()) = image;
    }
  }
  return HermitianMatrix(out);
}

HermitianMatrix choi_matrix(const KrausMap& phi) {
  return choi_matrix([&phi](const ComplexMatrix& x) { return apply_channel(phi, x); }, phi.d_in());
}

CptpReport is_cptp(const KrausMap& phi, double tol) {
  CptpReport r{};
  r.choi_min_eigenvalue = min_eigenvalue(choi_matrix(phi));
  r.trace_residual = phi.trace_preservation_residual();
  r.completely_positive = r.choi_min_eigenvalue >= -tol;
  r.trace_preserving = r.trace_residual <= tol;
  return r;
}

AncillaRep ancilla_representation(const KrausMap& phi) {
  if (phi.d_in() != phi.d_out()) throw DimensionError("ancilla_representation: square channels only");
  if (!phi.is_trace_preserving())
    throw InvariantError("ancilla_representation: channel is not trace preserving (residual " +
                         std::to_string(phi.trace_preservation_residual()) + ")");
  const auto d = static_cast<Eigen::Index>(phi.d_in());
  const auto n = static_cast<Eigen::Index>(phi.size());
  const Eigen::Index total = d * n;

  // U |b>|0> = V |b> = sum_j K_j |b> (x) |j>.
  ComplexMatrix u = ComplexMatrix::Zero(total, total);
  std::vector<ComplexVector> basis;
  for (Eigen::Index b = 0; b < d; ++b) {
    ComplexVector col = ComplexVector::Zero(total);
    for (Eigen::Index j = 0; j < n; ++j) {
      const ComplexMatrix& k = phi.kraus_ops()[static_cast<std::size_t>(j)];
      for (Eigen::Index a = 0; a < d; ++a) col(a * n + j) = k(a, b);
    }
    u.col(b * n) = col;
    basis.push_back(std::move(col));
  }

  // Fill the remaining columns in increasing index order. Each step takes the
  // standard basis vector with the largest residual after projecting out the
  // current basis (lowest index wins ties), orthogonalized twice.
  const auto residual_of = [&basis](ComplexVector v) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : basis) v -= e * e.dot(v);
    return v;
  };
  std::vector<bool> used(static_cast<std::size_t>(total), false);
  for (Eigen::Index slot = 0; slot < total; ++slot) {
    if (slot % n == 0) continue;
    Eigen::Index best = -1;
    double best_norm = -1.0;
    ComplexVector best_vec;
    for (Eigen::Index c = 0; c < total; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      ComplexVector r = residual_of(basis_vector(static_cast<std::size_t>(total), static_cast<std::size_t>(c)));
      const double norm = r.norm();
      if (norm > best_norm) {
        best = c;
        best_norm = norm;
        best_vec = std::move(r);
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    best_vec /= best_norm;
    u.col(slot) = best_vec;
    basis.push_back(std::move(best_vec));
  }

  return AncillaRep{std::move(u), basis_vector(static_cast<std::size_t>(n), 0), phi.d_in(), phi.size()};
}

ComplexVector purify(const DensityMatrix& rho) {
  const Spectrum& s = rho.spectrum();
  const double scale = s.max_value();
  std::vector<Eigen::Index> support;
  for (Eigen::Index k = 0; k < s.values.size(); ++k)
    if (s.values(k) > kKernelEta * scale) support.push_back(k);
  const auto d = static_cast<Eigen::Index>(rho.dim());
  const auto m = static_cast<Eigen::Index>(support.size());
  ComplexVector psi = ComplexVector::Zero(d * m);
  for (Eigen::Index slot = 0; slot < m; ++slot) {
    const Eigen::Index k = support[static_cast<std::size_t>(slot)];
    const double amp = std::sqrt(s.values(k));
    for (Eigen::Index i = 0; i < d; ++i) psi(i * m + slot) += amp * s.vectors(i, k);
  }
  return psi;
}

KrausMap tensor_channel(const KrausMap& phi, const KrausMap& psi) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(phi.size() * psi.size());
  for (const auto& k : phi.kraus_ops())
    for (const auto& l : psi.kraus_ops()) ops.push_back(tensor(k, l));
  return KrausMap(std::move(ops));
}

}  // namespace entropion
