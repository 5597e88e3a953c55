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

#include "entropion/holevo.hpp"

#include <cmath>
#include <string>

#include "entropion/entropy.hpp"

namespace entropion {

Ensemble::Ensemble(std::vector<double> weights, std::vector<DensityMatrix> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
  if (weights_.empty() || weights_.size() != states_.size())
    throw DimensionError("Ensemble: need one weight per state and at least one state");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw InvariantError("Ensemble: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw InvariantError("Ensemble: weights sum to " + std::to_string(sum) + ", expected 1");
  for (const auto& s : states_)
    if (s.dim() != states_.front().dim()) throw DimensionError("Ensemble: states of mixed dimension");
}

DensityMatrix Ensemble::average() const {
  const auto d = static_cast<Eigen::Index>(dim());
  ComplexMatrix avg = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < size(); ++j) avg += weights_[j] * states_[j].matrix();
  return DensityMatrix(HermitianMatrix::hermitian_part(avg));
}

Ensemble transform(const KrausMap& phi, const Ensemble& e) {
  std::vector<DensityMatrix> out;
  out.reserve(e.size());
  for (const auto& s : e.states()) out.push_back(apply_channel(phi, s));
  return Ensemble(e.weights(), std::move(out));
}

double chi(const Ensemble& e) {
  double mean = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) mean += e.weights()[j] * von_neumann_entropy(e.states()[j]);
  return von_neumann_entropy(e.average()) - mean;
}

double yuen_ozawa_sum(const Ensemble& e) {
  const DensityMatrix avg = e.average();
  double sum = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    // supp(rho_j) sits inside supp(rho_av) since pi_j > 0.
    sum += e.weights()[j] * relative_entropy(e.states()[j], avg).value();
  }
  return sum;
}

double yuen_ozawa_gap(const Ensemble& e) { return std::abs(chi(e) - yuen_ozawa_sum(e)); }

DensityMatrix qc_state(const Ensemble& e) {
  const auto d = static_cast<Eigen::Index>(e.dim());
  const auto n = static_cast<Eigen::Index>(e.size());
  ComplexMatrix g = ComplexMatrix::Zero(d * n, d * n);
  for (std::size_t j = 0; j < e.size(); ++j)
    g += e.weights()[j] * tensor(e.states()[j].matrix(), basis_projector(e.size(), j));
  return DensityMatrix(HermitianMatrix::hermitian_part(g));
}

double chi_via_qc(const Ensemble& e) {
  const DensityMatrix g = qc_state(e);
  const ComplexMatrix product = tensor(e.average().matrix(), HermitianMatrix::diagonal(e.weights()).matrix());
  return relative_entropy(g, HermitianMatrix::hermitian_part(product)).value();
}

Povm tensor_povm(const Povm& m, const Povm& n) {
  std::vector<HermitianMatrix> effects;
  effects.reserve(m.outcomes() * n.outcomes());
  for (const auto& a : m.effects())
    for (const auto& b : n.effects()) effects.push_back(HermitianMatrix::hermitian_part(tensor(a.matrix(), b.matrix())));
  return Povm(std::move(effects));
}

double chi_measured(const Ensemble& e, const Povm& m) {
  if (m.dim() != e.dim()) throw DimensionError("chi_measured: POVM and ensemble dimensions differ");
  std::vector<double> avg(m.outcomes(), 0.0);
  double mean = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    std::vector<double> p = measure(m, e.states()[j].matrix());
    for (auto& x : p) x = std::max(x, 0.0);
    mean += e.weights()[j] * shannon_entropy(p);
    for (std::size_t a = 0; a < p.size(); ++a) avg[a] += e.weights()[j] * p[a];
  }
  return shannon_entropy(avg) - mean;
}

double check_holevo_bound(const Ensemble& e, const Povm& m) { return chi(e) - chi_measured(e, m); }

PartialMeasurementChain check_partial_measurement_chain(const Ensemble& e_ab, const Povm& m_a, const Povm& m_b) {
  if (m_a.dim() * m_b.dim() != e_ab.dim())
    throw DimensionError("check_partial_measurement_chain: d_A * d_B must equal the ensemble dimension");
  PartialMeasurementChain r{};
  r.chi_ab = chi(e_ab);
  r.chi_b_measured = chi(transform(tensor_channel(KrausMap::identity(m_a.dim()), povm_channel(m_b)), e_ab));
  r.chi_both_measured = chi_measured(e_ab, tensor_povm(m_a, m_b));
  r.margin1 = r.chi_ab - r.chi_b_measured;
  r.margin2 = r.chi_b_measured - r.chi_both_measured;
  return r;
}

double yuen_ozawa_route_margin(const Ensemble& e, const KrausMap& phi) {
  const DensityMatrix avg = e.average();
  const DensityMatrix avg_out = apply_channel(phi, avg);
  double worst = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const DensityMatrix& rho = e.states()[j];
    const double before = relative_entropy(rho, avg).value();
    const double after = relative_entropy(apply_channel(phi, rho), avg_out).value();
    worst = j == 0 ? before - after : std::min(worst, before - after);
  }
  return worst;
}

double qc_route_margin(const Ensemble& e, const KrausMap& phi) {
  const KrausMap lifted = tensor_channel(phi, KrausMap::identity(e.size()));
  const DensityMatrix g = qc_state(e);
  const HermitianMatrix product = HermitianMatrix::hermitian_part(
      tensor(e.average().matrix(), HermitianMatrix::diagonal(e.weights()).matrix()));
  const double before = relative_entropy(g, product).value();
  const double after = relative_entropy(apply_channel(lifted, g), apply_channel(lifted, product)).value();
  return before - after;
}

}  // namespace entropion
