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
#include <vector>

#include "entropion/channels.hpp"
#include "entropion/matcore.hpp"

namespace entropion {

/// Weighted family {pi_j, rho_j}: pi_j > 0 summing to one, states of a
/// common dimension.
class Ensemble {
 public:
  Ensemble(std::vector<double> weights, std::vector<DensityMatrix> states);

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<DensityMatrix>& states() const { return states_; }
  std::size_t size() const { return weights_.size(); }
  std::size_t dim() const { return states_.front().dim(); }

  /// rho_av = sum_j pi_j rho_j.
  DensityMatrix average() const;

 private:
  std::vector<double> weights_;
  std::vector<DensityMatrix> states_;
};

/// Each rho_j replaced by Phi(rho_j); Phi must be trace preserving.
Ensemble transform(const KrausMap& phi, const Ensemble& e);

/// chi(E) = S(rho_av) - sum_j pi_j S(rho_j).
double chi(const Ensemble& e);
/// sum_j pi_j H(rho_j, rho_av).
double yuen_ozawa_sum(const Ensemble& e);
/// |chi(E) - yuen_ozawa_sum(E)|.
double yuen_ozawa_gap(const Ensemble& e);

/// gamma_QC = sum_j pi_j rho_j (x) |j><j|, classical register last.
DensityMatrix qc_state(const Ensemble& e);
/// H(gamma_QC, gamma_Q (x) gamma_C).
double chi_via_qc(const Ensemble& e);

/// Product POVM {M_a (x) N_b}, a outer.
Povm tensor_povm(const Povm& m, const Povm& n);

/// chi of the measured ensemble from outcome distributions p(a|j) = Tr rho_j M_a,
/// using Shannon entropies (the measured states are diagonal).
double chi_measured(const Ensemble& e, const Povm& m);

/// chi(E) - chi(Phi_M(E)).
double check_holevo_bound(const Ensemble& e, const Povm& m);

struct PartialMeasurementChain {
  double chi_ab;
  double chi_b_measured;     // chi((I (x) Phi_{M_B})(E))
  double chi_both_measured;  // chi((Phi_{M_A} (x) Phi_{M_B})(E))
  double margin1;            // chi_ab - chi_b_measured
  double margin2;            // chi_b_measured - chi_both_measured
};

/// Ensemble on H_A (x) H_B with d_A = m_a.dim(), d_B = m_b.dim().
PartialMeasurementChain check_partial_measurement_chain(const Ensemble& e_ab, const Povm& m_a, const Povm& m_b);

/// min_j [H(rho_j, rho_av) - H(Phi rho_j, Phi rho_av)].
double yuen_ozawa_route_margin(const Ensemble& e, const KrausMap& phi);
/// H(gamma_QC, gamma_Q (x) gamma_C) - H((Phi (x) I) gamma_QC, (Phi (x) I)(gamma_Q (x) gamma_C)).
double qc_route_margin(const Ensemble& e, const KrausMap& phi);

}  // namespace entropion
