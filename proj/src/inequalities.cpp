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

#include "entropion/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "entropion/entropy.hpp"
#include "entropion/superop.hpp"

namespace entropion {

void InstanceDigest::bytes(const void* p, std::size_t n) {
  const auto* b = static_cast<const unsigned char*>(p);
  for (std::size_t i = 0; i < n; ++i) {
    h_ ^= b[i];
    h_ *= 0x100000001b3ULL;
  }
}

InstanceDigest& InstanceDigest::add(const ComplexMatrix& m) {
  add(static_cast<std::uint64_t>(m.rows()));
  add(static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      add(m(i, j).real());
      add(m(i, j).imag());
    }
  return *this;
}

InstanceDigest& InstanceDigest::add(double x) {
  bytes(&x, sizeof x);
  return *this;
}

InstanceDigest& InstanceDigest::add(std::uint64_t x) {
  bytes(&x, sizeof x);
  return *this;
}

std::string InstanceDigest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

namespace {

ComplexMatrix zeros_like(const ComplexMatrix& m) { return ComplexMatrix::Zero(m.rows(), m.cols()); }

HermitianMatrix sum_of(const std::vector<HermitianMatrix>& ms) {
  ComplexMatrix s = zeros_like(ms.front().matrix());
  for (const auto& m : ms) s += m.matrix();
  return HermitianMatrix::hermitian_part(s);
}

double lambda_min_of(const ComplexMatrix& m) { return min_eigenvalue(HermitianMatrix::hermitian_part(m)); }

// Throws unless range(a) lies in the support of p (to 1e-10, relative).
void require_range_inside(const HermitianMatrix& p, const ComplexMatrix& a, const char* who) {
  const HermitianMatrix pinv = pseudo_inverse(p);
  const ComplexMatrix leak = a - p.matrix() * (pinv.matrix() * a);
  if (max_abs(leak) > 1e-10 * std::max(1.0, max_abs(a)))
    throw KernelObstruction(std::string(who) + ": range of A leaves the support of P");
}

void require_full_rank(const HermitianMatrix& m, const char* who) {
  const Spectrum s = hermitian_eig(m);
  if (s.values(0) <= kKernelEta * s.max_abs_value())
    throw InvariantError(std::string(who) + ": argument must be positive definite");
}

double entropy(const HermitianMatrix& m) { return von_neumann_entropy(m); }

}  // namespace

// ---- joint convexity ----

void ConvexityInstance::validate() const {
  if (weights.empty() || weights.size() != p.size() || weights.size() != q.size())
    throw DimensionError("ConvexityInstance: weights, P and Q lists must have one common length");
  double sum = 0.0;
  for (double x : weights) {
    if (x < 0.0) throw InvariantError("ConvexityInstance: negative weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw InvariantError("ConvexityInstance: weights do not sum to one");
  const std::size_t d = p.front().dim();
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j].dim() != d || q[j].dim() != d) throw DimensionError("ConvexityInstance: mixed dimensions");
}

std::optional<JointConvexity> check_joint_convexity(const ConvexityInstance& inst) {
  inst.validate();
  const std::size_t n = inst.weights.size();
  double weighted = 0.0, plain = 0.0, scaled = 0.0;
  ComplexMatrix p_mix = zeros_like(inst.p.front()), q_mix = zeros_like(inst.p.front());
  ComplexMatrix p_sum = p_mix, q_sum = q_mix;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = inst.weights[j];
    const EntropyValue h = relative_entropy(inst.p[j], inst.q[j]);
    if (!h.is_finite()) return std::nullopt;
    weighted += x * h.value();
    plain += h.value();
    scaled += relative_entropy(HermitianMatrix::hermitian_part(x * inst.p[j].matrix()),
                               HermitianMatrix::hermitian_part(x * inst.q[j].matrix()))
                  .value();
    p_mix += x * inst.p[j].matrix();
    q_mix += x * inst.q[j].matrix();
    p_sum += inst.p[j].matrix();
    q_sum += inst.q[j].matrix();
  }
  const EntropyValue h_mix =
      relative_entropy(HermitianMatrix::hermitian_part(p_mix), HermitianMatrix::hermitian_part(q_mix));
  const EntropyValue h_sum =
      relative_entropy(HermitianMatrix::hermitian_part(p_sum), HermitianMatrix::hermitian_part(q_sum));
  if (!h_mix.is_finite() || !h_sum.is_finite()) return std::nullopt;
  return JointConvexity{weighted - h_mix.value(), plain - h_sum.value(), scaled - h_mix.value(),
                        std::abs(scaled - weighted)};
}

// ---- Schwarz family ----

double check_schwarz_quadratic(const std::vector<ComplexMatrix>& a, const std::vector<HermitianMatrix>& p,
                               const std::vector<HermitianMatrix>& q, double t) {
  if (a.empty() || a.size() != p.size() || a.size() != q.size())
    throw DimensionError("check_schwarz_quadratic: A, P, Q lists must have one common length");
  double lhs = 0.0;
  ComplexMatrix a_sum = zeros_like(a.front());
  for (std::size_t j = 0; j < a.size(); ++j) {
    lhs += resolvent_quadratic_form(SuperOpSpec(p[j], q[j], t), a[j]);
    a_sum += a[j];
  }
  const double rhs = resolvent_quadratic_form(SuperOpSpec(sum_of(p), sum_of(q), t), a_sum);
  return lhs - rhs;
}

double check_operator_schwarz(const std::vector<ComplexMatrix>& a, const std::vector<HermitianMatrix>& p) {
  if (a.empty() || a.size() != p.size())
    throw DimensionError("check_operator_schwarz: A and P lists must have one common length");
  ComplexMatrix lhs = ComplexMatrix::Zero(a.front().cols(), a.front().cols());
  ComplexMatrix a_sum = zeros_like(a.front());
  for (std::size_t k = 0; k < a.size(); ++k) {
    require_range_inside(p[k], a[k], "check_operator_schwarz");
    lhs += a[k].adjoint() * pseudo_inverse(p[k]).matrix() * a[k];
    a_sum += a[k];
  }
  const HermitianMatrix p_sum = sum_of(p);
  require_range_inside(p_sum, a_sum, "check_operator_schwarz");
  const ComplexMatrix rhs = a_sum.adjoint() * pseudo_inverse(p_sum).matrix() * a_sum;
  return lambda_min_of(lhs - rhs);
}

CpSchwarzMargins check_cp_schwarz(const KrausMap& phi, const ComplexMatrix& a, const ComplexMatrix& b,
                                  const HermitianMatrix& p) {
  require_range_inside(p, a, "check_cp_schwarz");
  const ComplexMatrix phi_a = apply_channel(phi, a);
  const HermitianMatrix phi_p = apply_channel(phi, p);
  require_range_inside(phi_p, phi_a, "check_cp_schwarz");
  const ComplexMatrix cscp_lhs = apply_channel(phi, ComplexMatrix(a.adjoint() * pseudo_inverse(p).matrix() * a));
  const ComplexMatrix cscp_rhs = phi_a.adjoint() * pseudo_inverse(phi_p).matrix() * phi_a;

  const HermitianMatrix phi_bb = HermitianMatrix::hermitian_part(apply_channel(phi, ComplexMatrix(b.adjoint() * b)));
  const ComplexMatrix phi_ab = apply_channel(phi, ComplexMatrix(a.adjoint() * b));
  const ComplexMatrix phi_ba = apply_channel(phi, ComplexMatrix(b.adjoint() * a));
  require_range_inside(phi_bb, phi_ba, "check_cp_schwarz");
  const ComplexMatrix csab_lhs = apply_channel(phi, ComplexMatrix(a.adjoint() * a));
  const ComplexMatrix csab_rhs = phi_ab * pseudo_inverse(phi_bb).matrix() * phi_ba;
  return {lambda_min_of(cscp_lhs - cscp_rhs), lambda_min_of(csab_lhs - csab_rhs)};
}

BlockContraction check_block_contraction(const HermitianMatrix& p, const HermitianMatrix& q, const ComplexMatrix& c,
                                         double tol) {
  if (static_cast<std::size_t>(c.rows()) != p.dim() || static_cast<std::size_t>(c.cols()) != q.dim())
    throw DimensionError("check_block_contraction: C must be dim(P) x dim(Q)");
  require_full_rank(p, "check_block_contraction");
  require_full_rank(q, "check_block_contraction");
  const Eigen::Index n = c.rows(), m = c.cols();
  ComplexMatrix block(n + m, n + m);
  block.topLeftCorner(n, n) = p.matrix();
  block.topRightCorner(n, m) = c;
  block.bottomLeftCorner(m, n) = c.adjoint();
  block.bottomRightCorner(m, m) = q.matrix();

  BlockContraction r{};
  r.block_min_eig = lambda_min_of(block);
  r.schur_min_eig = lambda_min_of(q.matrix() - c.adjoint() * pseudo_inverse(p).matrix() * c);
  const auto inv_root = [](double x) { return 1.0 / std::sqrt(x); };
  const ComplexMatrix x = matrix_function(p, inv_root).matrix() * c * matrix_function(q, inv_root).matrix();
  r.sigma_max = std::sqrt(std::max(0.0, max_eigenvalue(HermitianMatrix::hermitian_part(x.adjoint() * x))));
  r.block_psd = r.block_min_eig >= -tol;
  r.schur_psd = r.schur_min_eig >= -tol;
  r.contraction = r.sigma_max <= 1.0 + tol;
  r.indeterminate =
      std::abs(r.block_min_eig) < tol || std::abs(r.schur_min_eig) < tol || std::abs(r.sigma_max - 1.0) < tol;
  return r;
}

// ---- monotonicity ----

std::optional<double> check_monotonicity(const DensityMatrix& rho, const DensityMatrix& gamma,
                                         const MonotonicityMap& map) {
  if (rho.dim() != gamma.dim()) throw DimensionError("check_monotonicity: rho and gamma differ in dimension");
  const EntropyValue before = relative_entropy(rho, gamma);
  if (!before.is_finite()) return std::nullopt;
  const auto image = [&map](const DensityMatrix& x) -> HermitianMatrix {
    if (std::holds_alternative<Dephasing>(map)) return HermitianMatrix::hermitian_part(dephase(x.matrix()));
    if (const auto* pt = std::get_if<PartialTrace>(&map))
      return HermitianMatrix::hermitian_part(partial_trace(x.matrix(), pt->dims, pt->keep));
    const KrausMap& phi = std::get<KrausMap>(map);
    if (!phi.is_trace_preserving()) throw InvariantError("check_monotonicity: channel is not trace preserving");
    return apply_channel(phi, static_cast<const HermitianMatrix&>(x));
  };
  const EntropyValue after = relative_entropy(image(rho), image(gamma));
  // A finite H(rho, gamma) keeps the image finite too; anything else is a bug.
  if (!after.is_finite()) throw InvariantError("check_monotonicity: image relative entropy became infinite");
  return before.value() - after.value();
}

// ---- strong subadditivity ----

namespace {
void require_tripartite(const DensityMatrix& rho, const std::vector<std::size_t>& dims, const char* who) {
  if (dims.size() != 3 || dims[0] * dims[1] * dims[2] != rho.dim())
    throw DimensionError(std::string(who) + ": dims must be three factors multiplying to dim(rho)");
}
}  // namespace

SsaMargins check_ssa(const DensityMatrix& rho_abc, const std::vector<std::size_t>& dims) {
  require_tripartite(rho_abc, dims, "check_ssa");
  const auto s = [&](const std::vector<std::size_t>& keep) {
    return entropy(HermitianMatrix::hermitian_part(partial_trace(rho_abc.matrix(), dims, keep)));
  };
  const double s_abc = von_neumann_entropy(rho_abc);
  const double s_ab = s({0, 1}), s_bc = s({1, 2}), s_ac = s({0, 2}), s_b = s({1}), s_c = s({2});
  const double primary = s_ab + s_bc - s_abc - s_b;
  const double alt = s_ab + s_ac - s_b - s_c;
  return {primary, alt, alt};
}

double ssa_via_monotonicity(const DensityMatrix& rho_abc, const std::vector<std::size_t>& dims) {
  require_tripartite(rho_abc, dims, "ssa_via_monotonicity");
  const auto da = static_cast<Eigen::Index>(dims[0]);
  const ComplexMatrix rho_bc = partial_trace(rho_abc.matrix(), dims, {1, 2});
  const DensityMatrix gamma(HermitianMatrix::hermitian_part(
      tensor(ComplexMatrix(ComplexMatrix::Identity(da, da) / static_cast<double>(da)), rho_bc)));
  const auto margin = check_monotonicity(rho_abc, gamma, PartialTrace{dims, {0, 1}});
  // gamma has full support on A and contains the support of rho_BC, so H is finite.
  if (!margin) throw InvariantError("ssa_via_monotonicity: unexpected infinite relative entropy");
  return *margin;
}

double ssa_alt_via_purification(const DensityMatrix& rho_abc, const std::vector<std::size_t>& dims) {
  require_tripartite(rho_abc, dims, "ssa_alt_via_purification");
  const ComplexVector psi = purify(rho_abc);
  const std::size_t m = static_cast<std::size_t>(psi.size()) / rho_abc.dim();
  const ComplexMatrix full = psi * psi.adjoint();
  const std::vector<std::size_t> dims4{dims[0], dims[1], dims[2], m};
  const DensityMatrix rho_abd(HermitianMatrix::hermitian_part(partial_trace(full, dims4, {0, 1, 3})));
  return check_ssa(rho_abd, {dims[0], dims[1], m}).alt;
}

// ---- concavity ----

double check_concavity(const ConcaveFunction& f, const std::vector<DensityMatrix>& states,
                       const std::vector<double>& weights) {
  if (states.empty() || states.size() != weights.size())
    throw DimensionError("check_concavity: states and weights must have one common length");
  const std::function<double(const DensityMatrix&)> value = [&f](const DensityMatrix& rho) {
    if (const auto* ce = std::get_if<ConditionalEntropyF>(&f)) return conditional_entropy(rho, ce->dims);
    const KrausMap& phi = std::get<EntropyDiffF>(f).phi;
    if (!phi.is_trace_preserving()) throw InvariantError("check_concavity: channel is not trace preserving");
    return von_neumann_entropy(rho) - von_neumann_entropy(apply_channel(phi, rho));
  };
  ComplexMatrix mix = zeros_like(states.front());
  double avg = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    mix += weights[i] * states[i].matrix();
    avg += weights[i] * value(states[i]);
  }
  return value(DensityMatrix(HermitianMatrix::hermitian_part(mix))) - avg;
}

// ---- pure states ----

PureStateLemmas check_pure_state_lemmas(const ComplexVector& psi_ab, const std::vector<std::size_t>& dims) {
  if (dims.size() != 2 || dims[0] * dims[1] != static_cast<std::size_t>(psi_ab.size()))
    throw DimensionError("check_pure_state_lemmas: dims must multiply to the vector length");
  const ComplexMatrix full = psi_ab * psi_ab.adjoint();
  const DensityMatrix rho_a(HermitianMatrix::hermitian_part(partial_trace(full, dims, {0})));
  const DensityMatrix rho_b(HermitianMatrix::hermitian_part(partial_trace(full, dims, {1})));
  // Descending spectra, shorter one padded with zeros.
  std::vector<double> a(rho_a.spectrum().values.begin(), rho_a.spectrum().values.end());
  std::vector<double> b(rho_b.spectrum().values.begin(), rho_b.spectrum().values.end());
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  double dist = 0.0;
  for (std::size_t k = 0; k < n; ++k) dist = std::max(dist, std::abs(a[k] - b[k]));
  return {dist, std::abs(von_neumann_entropy(rho_a) - von_neumann_entropy(rho_b))};
}

// ---- adjoint chain ----

double check_adjoint_quadratic(const KrausMap& phi, const HermitianMatrix& p, const HermitianMatrix& q,
                               const ComplexMatrix& a, double t) {
  if (!phi.is_trace_preserving()) throw InvariantError("check_adjoint_quadratic: channel is not trace preserving");
  const SuperOpSpec outer(apply_channel(phi, p), apply_channel(phi, q), t);
  const ComplexMatrix x = solve_resolvent(outer, apply_channel(phi, a));
  const ComplexMatrix back = apply_channel(adjoint_channel(phi), x);
  const SuperOpSpec inner(p, q, t);
  const double rhs = hs_inner(x, outer.apply(x)).real();
  const double lhs = hs_inner(back, inner.apply(back)).real();
  return rhs - lhs;
}

}  // namespace entropion
