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

#include "entropion/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "entropion/entropy.hpp"
#include "entropion/holevo.hpp"
#include "entropion/superop.hpp"

namespace entropion {

namespace {

using Kind = TrialOutcome::Kind;

TrialOutcome evaluated(double margin, const InstanceDigest& digest) { return {Kind::evaluated, margin, digest.hex()}; }

// Identity checks report -|gap| so that pass means gap <= tol.
TrialOutcome identity(double gap, const InstanceDigest& digest) { return evaluated(-std::abs(gap), digest); }

constexpr std::array<double, 4> kTValues{0.0, 0.5, 1.0, 10.0};

double pick_t(std::uint64_t trial) { return kTValues[trial % kTValues.size()]; }

DensityMatrix normalized(const HermitianMatrix& m) {
  return DensityMatrix(HermitianMatrix::hermitian_part(m.matrix() / m.trace()));
}

// Kernel-compatible density pair (rho, gamma), ker(gamma) inside ker(rho), random ranks.
std::pair<DensityMatrix, DensityMatrix> compatible_states(std::size_t d, Rng& rng) {
  const std::size_t q_rank = rng.uniform_int(1, d);
  const std::size_t p_rank = rng.uniform_int(1, q_rank);
  const PsdPair pair = random_kernel_compatible_pair(d, p_rank, q_rank, rng);
  return {normalized(pair.p), normalized(pair.q)};
}

InstanceDigest digest_of(std::initializer_list<const ComplexMatrix*> ms) {
  InstanceDigest h;
  for (const auto* m : ms) h.add(*m);
  return h;
}

void add_ensemble(InstanceDigest& h, const Ensemble& e) {
  for (double w : e.weights()) h.add(w);
  for (const auto& s : e.states()) h.add(s.matrix());
}

void add_povm(InstanceDigest& h, const Povm& m) {
  for (const auto& e : m.effects()) h.add(e.matrix());
}

void add_channel(InstanceDigest& h, const KrausMap& phi) {
  for (const auto& k : phi.kraus_ops()) h.add(k);
}

// ---- superoperator and relative entropy routes ----

TrialOutcome resolvent_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const DensityMatrix p = random_density(d, rng);
  const DensityMatrix q = random_density(d, rng);
  const double t = rng.uniform(0.0, 10.0);
  const ComplexMatrix x = random_gaussian_matrix(d, d, rng);
  const SuperOpSpec spec(p, q, t);
  const ComplexMatrix y = solve_resolvent(spec, x);
  const ComplexVector dense = superop_matrix(spec).partialPivLu().solve(vec(x));
  InstanceDigest h = digest_of({&p.matrix(), &q.matrix(), &x});
  h.add(t);
  return identity(max_abs(y - unvec(dense, d, d)), h);
}

TrialOutcome relent_routes_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const DensityMatrix p = random_density(d, rng);
  const DensityMatrix q = random_density(d, rng);
  const double spectral = relative_entropy(p, q).value();
  const double quadrature = relative_entropy_integral(p, q).value();
  const double kernel = relative_entropy_spectral_kernel(p, q).value();
  const double gap = std::max({std::abs(spectral - quadrature), std::abs(spectral - kernel),
                               std::abs(quadrature - kernel)});
  return identity(gap, digest_of({&p.matrix(), &q.matrix()}));
}

TrialOutcome scalar_log_trial(Rng&, std::uint64_t trial, std::size_t, double) {
  static constexpr std::array<double, 5> kW{0.1, 0.5, 1.0, 2.0, 10.0};
  const double w = kW[trial % kW.size()];
  const ScalarLogIdentity r = scalar_log_identity(w);
  InstanceDigest h;
  h.add(w);
  return identity(std::max(std::abs(r.lhs - r.rhs1), std::abs(r.lhs - r.rhs2)), h);
}

// ---- joint convexity ----

ConvexityInstance random_convexity_instance(std::size_t d, std::size_t terms, Rng& rng) {
  ConvexityInstance inst;
  inst.weights = random_simplex(terms, rng);
  for (std::size_t j = 0; j < terms; ++j) {
    const std::size_t q_rank = rng.uniform_int(1, d);
    const std::size_t p_rank = rng.uniform_int(1, q_rank);
    PsdPair pair = random_kernel_compatible_pair(d, p_rank, q_rank, rng);
    inst.p.push_back(std::move(pair.p));
    inst.q.push_back(std::move(pair.q));
  }
  return inst;
}

InstanceDigest digest_of(const ConvexityInstance& inst) {
  InstanceDigest h;
  for (double x : inst.weights) h.add(x);
  for (std::size_t j = 0; j < inst.p.size(); ++j) h.add(inst.p[j].matrix()).add(inst.q[j].matrix());
  return h;
}

TrialOutcome joint_convexity_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const ConvexityInstance inst = random_convexity_instance(d, rng.uniform_int(1, 4), rng);
  const auto r = check_joint_convexity(inst);
  if (!r) return TrialOutcome::skipped(digest_of(inst).hex());
  return evaluated(std::min({r->margin, r->subadditive_margin, r->scaled_margin}), digest_of(inst));
}

TrialOutcome joint_convexity_equality_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const std::size_t terms = rng.uniform_int(2, 4);
  ConvexityInstance inst = random_convexity_instance(d, 1, rng);
  inst.weights = random_simplex(terms, rng);
  inst.p.assign(terms, inst.p.front());
  inst.q.assign(terms, inst.q.front());
  const auto r = check_joint_convexity(inst);
  if (!r) return TrialOutcome::skipped(digest_of(inst).hex());
  return identity(r->margin, digest_of(inst));
}

// ---- Schwarz family ----

TrialOutcome schwarz_quadratic_trial(Rng& rng, std::uint64_t trial, std::size_t d, double) {
  const double t = pick_t(trial);
  const std::size_t terms = rng.uniform_int(2, 4);
  std::vector<ComplexMatrix> a;
  std::vector<HermitianMatrix> p, q;
  InstanceDigest h;
  h.add(t);
  for (std::size_t j = 0; j < terms; ++j) {
    a.push_back(random_gaussian_matrix(d, d, rng));
    p.push_back(random_density(d, rng));
    q.push_back(random_density(d, rng));
    h.add(a.back()).add(p.back().matrix()).add(q.back().matrix());
  }
  return evaluated(check_schwarz_quadratic(a, p, q, t), h);
}

TrialOutcome operator_schwarz_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const std::size_t terms = rng.uniform_int(2, 4);
  std::vector<ComplexMatrix> a;
  std::vector<HermitianMatrix> p;
  InstanceDigest h;
  for (std::size_t k = 0; k < terms; ++k) {
    a.push_back(random_gaussian_matrix(d, d, rng));
    p.push_back(random_density(d, rng));
    h.add(a.back()).add(p.back().matrix());
  }
  return evaluated(check_operator_schwarz(a, p), h);
}

TrialOutcome cp_schwarz_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const KrausMap phi = random_cptp(d, rng.uniform_int(1, 4), rng);
  const ComplexMatrix a = random_gaussian_matrix(d, d, rng);
  const ComplexMatrix b = random_gaussian_matrix(d, d, rng);
  const DensityMatrix p = random_density(d, rng);
  InstanceDigest h = digest_of({&a, &b, &p.matrix()});
  add_channel(h, phi);
  const CpSchwarzMargins m = check_cp_schwarz(phi, a, b, p);
  return evaluated(std::min(m.cscp, m.csab), h);
}

// Blocks straddle the PSD boundary: C = s P^{1/2} X Q^{1/2} with ||X|| = 1
// and s uniform in [0.5, 1.5], so the block is PSD exactly when s <= 1.
TrialOutcome block_contraction_trial(Rng& rng, std::uint64_t, std::size_t d, double tol) {
  const DensityMatrix p = random_density(d, rng);
  const DensityMatrix q = random_density(d, rng);
  ComplexMatrix x = random_gaussian_matrix(d, d, rng);
  x /= std::sqrt(max_eigenvalue(HermitianMatrix::hermitian_part(x.adjoint() * x)));
  const double s = rng.uniform(0.5, 1.5);
  const ComplexMatrix c = s * sqrt_psd(p).matrix() * x * sqrt_psd(q).matrix();
  const InstanceDigest h = digest_of({&p.matrix(), &q.matrix(), &c});
  const BlockContraction r = check_block_contraction(p, q, c, tol);
  if (r.indeterminate) return TrialOutcome::band(h.hex());
  return evaluated(r.agree() ? 0.0 : -1.0, h);
}

// ---- monotonicity ----

TrialOutcome monotonicity_trial(const MonotonicityMap& map, const DensityMatrix& rho, const DensityMatrix& gamma,
                                InstanceDigest h) {
  h.add(rho.matrix()).add(gamma.matrix());
  const auto margin = check_monotonicity(rho, gamma, map);
  if (!margin) return TrialOutcome::skipped(h.hex());
  return evaluated(*margin, h);
}

TrialOutcome monotonicity_dephase_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const auto [rho, gamma] = compatible_states(d, rng);
  return monotonicity_trial(Dephasing{}, rho, gamma, {});
}

// d is the kept factor; the traced factor has dimension 2.
TrialOutcome monotonicity_partial_trace_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const auto [rho, gamma] = compatible_states(2 * d, rng);
  return monotonicity_trial(PartialTrace{{d, 2}, {0}}, rho, gamma, {});
}

TrialOutcome monotonicity_general_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const KrausMap phi = random_cptp(d, 4, rng);
  const auto [rho, gamma] = compatible_states(d, rng);
  InstanceDigest h;
  add_channel(h, phi);
  return monotonicity_trial(phi, rho, gamma, h);
}

TrialOutcome monotonicity_unitary_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const KrausMap phi = KrausMap::unitary(random_unitary(d, rng));
  const auto [rho, gamma] = compatible_states(d, rng);
  InstanceDigest h;
  add_channel(h, phi);
  TrialOutcome out = monotonicity_trial(phi, rho, gamma, h);
  if (out.kind == Kind::evaluated) out.margin = -std::abs(out.margin);
  return out;
}

// ---- strong subadditivity ----

TrialOutcome ssa_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const std::size_t n = d * d * d;
  const DensityMatrix rho = random_density(n, rng.uniform_int(1, n), rng);
  const SsaMargins m = check_ssa(rho, {d, d, d});
  return evaluated(std::min(m.primary, m.alt), digest_of({&rho.matrix()}));
}

// Product states, the monotonicity and purification routes, and F on pure states.
TrialOutcome ssa_identities_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const std::vector<std::size_t> dims{d, d, d};
  const std::size_t n = d * d * d;
  const DensityMatrix rho = random_density(n, rng.uniform_int(1, n), rng);
  const DensityMatrix rho_ab = random_density(d * d, rng);
  const DensityMatrix rho_c = random_density(d, rng);
  const ComplexVector psi = random_unit_vector(n, rng);
  const DensityMatrix product(HermitianMatrix::hermitian_part(tensor(rho_ab.matrix(), rho_c.matrix())));
  const DensityMatrix pure = DensityMatrix::pure(psi);

  const double primary = check_ssa(rho, dims).primary;
  const double gap = std::max({std::abs(ssa_via_monotonicity(rho, dims) - primary),
                               std::abs(ssa_alt_via_purification(rho, dims) - primary),
                               std::abs(check_ssa(product, dims).primary), std::abs(check_ssa(pure, dims).f_value)});
  const ComplexMatrix psi_m = psi;
  return identity(gap, digest_of({&rho.matrix(), &rho_ab.matrix(), &rho_c.matrix(), &psi_m}));
}

// ---- concavity ----

TrialOutcome concavity_trial(const ConcaveFunction& f, std::size_t dim, Rng& rng, InstanceDigest h) {
  const std::size_t terms = rng.uniform_int(2, 4);
  const std::vector<double> weights = random_simplex(terms, rng);
  std::vector<DensityMatrix> states;
  for (std::size_t i = 0; i < terms; ++i) {
    states.push_back(random_density(dim, rng.uniform_int(1, dim), rng));
    h.add(weights[i]).add(states.back().matrix());
  }
  return evaluated(check_concavity(f, states, weights), h);
}

TrialOutcome concavity_conditional_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  return concavity_trial(ConditionalEntropyF{{d, d}}, d * d, rng, {});
}

TrialOutcome concavity_entropy_diff_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  KrausMap phi = random_cptp(d, rng.uniform_int(1, 3), rng);
  InstanceDigest h;
  add_channel(h, phi);
  return concavity_trial(EntropyDiffF{std::move(phi)}, d, rng, h);
}

// ---- pure states, adjoint chain ----

// Vectors in d (x) (d + 2).
TrialOutcome pure_state_lemmas_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const ComplexVector psi = random_unit_vector(d * (d + 2), rng);
  const PureStateLemmas r = check_pure_state_lemmas(psi, {d, d + 2});
  const ComplexMatrix psi_m = psi;
  return identity(std::max(r.spectra_distance, r.entropy_gap), digest_of({&psi_m}));
}

TrialOutcome adjoint_quadratic_trial(Rng& rng, std::uint64_t trial, std::size_t d, double) {
  const double t = pick_t(trial);
  const KrausMap phi = random_cptp(d, rng.uniform_int(1, 4), rng);
  const DensityMatrix p = random_density(d, rng);
  const DensityMatrix q = random_density(d, rng);
  const ComplexMatrix a = random_gaussian_matrix(d, d, rng);
  InstanceDigest h = digest_of({&p.matrix(), &q.matrix(), &a});
  h.add(t);
  add_channel(h, phi);
  return evaluated(check_adjoint_quadratic(phi, p, q, a, t), h);
}

// ---- Holevo ----

Ensemble draw_ensemble(std::size_t d, Rng& rng) {
  const std::size_t n = rng.uniform_int(1, 4);
  return random_ensemble(d, n, rng.uniform_int(1, d), rng);
}

TrialOutcome holevo_chi_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const Ensemble e = draw_ensemble(d, rng);
  InstanceDigest h;
  add_ensemble(h, e);
  return evaluated(chi(e), h);
}

TrialOutcome holevo_identities_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const Ensemble e = draw_ensemble(d, rng);
  const Povm m = random_povm(d, rng.uniform_int(1, 4), rng);
  InstanceDigest h;
  add_ensemble(h, e);
  add_povm(h, m);
  const double c = chi(e);
  const double measured_gap = std::abs(chi_measured(e, m) - chi(transform(povm_channel(m), e)));
  return identity(std::max({yuen_ozawa_gap(e), std::abs(chi_via_qc(e) - c), measured_gap}), h);
}

TrialOutcome holevo_bound_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const Ensemble e = draw_ensemble(d, rng);
  const Povm m = random_povm(d, rng.uniform_int(1, 4), rng);
  InstanceDigest h;
  add_ensemble(h, e);
  add_povm(h, m);
  return evaluated(check_holevo_bound(e, m), h);
}

// d is the dimension of each factor.
TrialOutcome holevo_chain_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const Ensemble e = draw_ensemble(d * d, rng);
  const Povm m_a = random_povm(d, rng.uniform_int(2, 3), rng);
  const Povm m_b = random_povm(d, rng.uniform_int(2, 3), rng);
  InstanceDigest h;
  add_ensemble(h, e);
  add_povm(h, m_a);
  add_povm(h, m_b);
  const PartialMeasurementChain r = check_partial_measurement_chain(e, m_a, m_b);
  return evaluated(std::min(r.margin1, r.margin2), h);
}

TrialOutcome holevo_routes_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const Ensemble e = draw_ensemble(d, rng);
  const Povm m = random_povm(d, rng.uniform_int(1, 4), rng);
  const KrausMap phi = povm_channel(m);
  InstanceDigest h;
  add_ensemble(h, e);
  add_povm(h, m);
  const double concavity = check_concavity(EntropyDiffF{phi}, e.states(), e.weights());
  return evaluated(std::min({yuen_ozawa_route_margin(e, phi), qc_route_margin(e, phi), concavity}), h);
}

// ---- structural identities ----

TrialOutcome conditional_entropy_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const DensityMatrix rho = random_density(d * d, rng.uniform_int(1, d * d), rng);
  const double gap = conditional_entropy(rho, {d, d}) - conditional_entropy_via_relative_entropy(rho, {d, d});
  return identity(gap, digest_of({&rho.matrix()}));
}

// Klein's bound H(P, Q) >= Tr P - Tr Q and H(lambda P, lambda Q) = lambda H(P, Q),
// on unnormalized kernel-compatible pairs.
TrialOutcome klein_homogeneity_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const std::size_t q_rank = rng.uniform_int(1, d);
  const PsdPair pair = random_kernel_compatible_pair(d, rng.uniform_int(1, q_rank), q_rank, rng);
  const HermitianMatrix p = HermitianMatrix::hermitian_part(rng.uniform(0.2, 3.0) * pair.p.matrix());
  const HermitianMatrix q = HermitianMatrix::hermitian_part(rng.uniform(0.2, 3.0) * pair.q.matrix());
  const double lambda = rng.uniform(0.1, 5.0);
  InstanceDigest h = digest_of({&p.matrix(), &q.matrix()});
  h.add(lambda);
  const double hpq = relative_entropy(p, q).value();
  const double scaled = relative_entropy(HermitianMatrix::hermitian_part(lambda * p.matrix()),
                                         HermitianMatrix::hermitian_part(lambda * q.matrix()))
                            .value();
  const double klein = hpq - (p.trace() - q.trace());
  return evaluated(std::min(klein, -std::abs(scaled - lambda * hpq)), h);
}

TrialOutcome dephasing_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const ComplexMatrix x = random_gaussian_matrix(d, d, rng);
  return identity(max_abs(dephase(x) - dephase_via_z(x)), digest_of({&x}));
}

// Round trip through U (rho (x) |0><0|) U^dagger and S(sigma_AB) = S(rho).
TrialOutcome ancilla_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const KrausMap phi = random_cptp(d, rng.uniform_int(1, 3), rng);
  const DensityMatrix rho = random_density(d, rng.uniform_int(1, d), rng);
  InstanceDigest h = digest_of({&rho.matrix()});
  add_channel(h, phi);
  const AncillaRep rep = ancilla_representation(phi);
  const auto n = rep.u.rows();
  const double unitarity = max_abs(rep.u.adjoint() * rep.u - ComplexMatrix::Identity(n, n));
  const double round_trip = max_abs(rep.apply(rho.matrix()) - apply_channel(phi, rho.matrix()));
  const double entropy_gap = std::abs(von_neumann_entropy(HermitianMatrix::hermitian_part(rep.dilate(rho.matrix()))) -
                                      von_neumann_entropy(rho));
  return identity(std::max({unitarity, round_trip, entropy_gap}), h);
}

TrialOutcome purification_trial(Rng& rng, std::uint64_t, std::size_t d, double) {
  const DensityMatrix rho = random_density(d, rng.uniform_int(1, d), rng);
  const ComplexVector psi = purify(rho);
  const std::size_t m = static_cast<std::size_t>(psi.size()) / d;
  const ComplexMatrix full = psi * psi.adjoint();
  const double reduction = max_abs(partial_trace(full, {d, m}, {0}) - rho.matrix());
  const PureStateLemmas r = check_pure_state_lemmas(psi, {d, m});
  return identity(std::max({reduction, r.spectra_distance, r.entropy_gap}), digest_of({&rho.matrix()}));
}

std::vector<SuiteInfo> build_registry() {
  return {
      {"resolvent", "solve_resolvent against the dense d^2 x d^2 solve (max-norm gap)", 100, {2, 3, 4},
       resolvent_trial},
      {"relent_routes", "spectral, quadrature and closed-form kernel relative entropy (pairwise gap)", 200,
       {2, 3, 4, 5}, relent_routes_trial},
      {"scalar_log", "scalar integral identities for -ln w at w in {0.1, 0.5, 1, 2, 10}", 5, {1}, scalar_log_trial},
      {"joint_convexity", "joint convexity, subadditive and scaled forms", 1000, {2, 3, 4, 5}, joint_convexity_trial},
      {"joint_convexity_equality", "joint convexity margin on identical pairs (gap from zero)", 200, {2, 3, 4, 5},
       joint_convexity_equality_trial},
      {"schwarz_quadratic", "resolvent quadratic form convexity, t in {0, 0.5, 1, 10}", 300, {2, 3, 4},
       schwarz_quadratic_trial},
      {"operator_schwarz", "operator Cauchy-Schwarz, lambda_min margin", 300, {2, 3, 4}, operator_schwarz_trial},
      {"cp_schwarz", "Kraus-form Schwarz inequalities for random CPTP maps", 200, {2, 3}, cp_schwarz_trial},
      {"block_contraction", "block PSD, Schur complement and contraction predicates agree", 500, {2, 3},
       block_contraction_trial},
      {"monotonicity_dephase", "monotonicity under dephasing", 300, {3}, monotonicity_dephase_trial},
      {"monotonicity_partial_trace", "monotonicity under Tr_B, B a qubit", 300, {2, 3},
       monotonicity_partial_trace_trial},
      {"monotonicity_general", "monotonicity under random 4-Kraus channels", 300, {3}, monotonicity_general_trial},
      {"monotonicity_unitary", "unitary invariance of relative entropy (gap from zero)", 300, {2, 3, 4},
       monotonicity_unitary_trial},
      {"ssa", "strong subadditivity, primary and alternate forms, on d x d x d", 500, {2}, ssa_trial},
      {"ssa_identities", "SSA through monotonicity and purification; product and pure cases", 200, {2},
       ssa_identities_trial},
      {"concavity_conditional", "concavity of S(AB) - S(A) on d x d", 300, {2}, concavity_conditional_trial},
      {"concavity_entropy_diff", "concavity of S(rho) - S(Phi(rho))", 300, {2, 3}, concavity_entropy_diff_trial},
      {"pure_state_lemmas", "reduced spectra of random vectors in d x (d + 2)", 200, {2, 3}, pure_state_lemmas_trial},
      {"adjoint_quadratic", "adjoint-map quadratic form chain, t in {0, 0.5, 1, 10}", 100, {2, 3},
       adjoint_quadratic_trial},
      {"holevo_chi", "chi is nonnegative", 200, {2, 3, 4}, holevo_chi_trial},
      {"holevo_identities", "Yuen-Ozawa, QC-state and measured-chi identities", 200, {2, 3, 4},
       holevo_identities_trial},
      {"holevo_bound", "Holevo bound for random POVMs", 200, {2, 3, 4}, holevo_bound_trial},
      {"holevo_chain", "partial measurement chain on d x d", 100, {2}, holevo_chain_trial},
      {"holevo_routes", "Yuen-Ozawa, QC-state and concavity routes to the Holevo bound", 100, {2, 3},
       holevo_routes_trial},
      {"conditional_entropy", "conditional entropy through relative entropy", 200, {2, 3},
       conditional_entropy_trial},
      {"klein_homogeneity", "Klein bound and homogeneity of relative entropy", 500, {2, 3, 4},
       klein_homogeneity_trial},
      {"dephasing", "diagonal projection against the Z-conjugation average", 80, {1, 2, 3, 4, 5, 6, 7, 8},
       dephasing_trial},
      {"ancilla", "ancilla representation round trip and entropy of the dilation", 200, {2, 3}, ancilla_trial},
      {"purification", "purification reduces to rho with matching reduced spectra", 200, {2, 3, 4},
       purification_trial},
  };
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = build_registry();
  return registry;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<std::string> expand_suite_names(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : suite_registry()) out.push_back(s.name);
    } else if (find_suite(n)) {
      out.push_back(n);
    } else {
      throw InvariantError("unknown suite '" + n + "'");
    }
  }
  return out;
}

CheckReport collect_report(const std::string& name, std::uint64_t seed, double tol,
                           const std::vector<TrialOutcome>& outcomes) {
  CheckReport report;
  report.suite_name = name;
  report.trials = outcomes.size();
  report.seed = seed;
  report.tol = tol;
  bool evaluated = false;
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < outcomes.size(); ++i) {
    const TrialOutcome& o = outcomes[i];
    if (o.kind == Kind::skipped_infinite) {
      ++report.skipped_infinite;
      continue;
    }
    if (o.kind == Kind::indeterminate) {
      ++report.indeterminate;
      continue;
    }
    evaluated = true;
    if (std::isnan(o.margin)) {
      worst = -std::numeric_limits<double>::infinity();
      report.failures.push_back({i, o.margin, o.digest});
    } else {
      worst = std::min(worst, o.margin);
      if (o.margin < -tol) report.failures.push_back({i, o.margin, o.digest});
    }
  }
  report.worst_margin = evaluated ? worst : 0.0;
  return report;
}

CheckReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const SuiteInfo* suite = find_suite(name);
  if (!suite) throw InvariantError("unknown suite '" + name + "'");
  if (!(opts.tol > 0.0)) throw InvariantError("run_suite: tol must be positive");
  const std::vector<std::size_t>& dims = opts.dims.empty() ? suite->default_dims : opts.dims;
  const std::uint64_t trials = opts.trials == 0 ? suite->default_trials : opts.trials;

  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<std::uint64_t> next{0};
  const auto work = [&] {
    for (std::uint64_t i = next++; i < trials; i = next++) {
      try {
        Rng rng = Rng::for_trial(opts.seed, i);
        outcomes[i] = suite->trial(rng, i, dims[i % dims.size()], opts.tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(trials)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CheckReport report = collect_report(name, opts.seed, opts.tol, outcomes);
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace entropion
