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

// Inequality checks. Every check returns a margin, RHS - LHS for scalar
// inequalities or lambda_min(RHS - LHS) for operator ones, so a check passes
// when margin >= -tol.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entropion/channels.hpp"
#include "entropion/matcore.hpp"

namespace entropion {

inline constexpr double kDefaultTol = 1e-9;

struct CheckFailure {
  std::uint64_t trial;
  double margin;
  std::string digest;
};

struct CheckReport {
  std::string suite_name;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  double worst_margin = 0.0;  // 0 when no trial was evaluated
  std::uint64_t skipped_infinite = 0;
  std::uint64_t indeterminate = 0;  // inside the tolerance band; not serialized
  std::vector<CheckFailure> failures;
  double runtime_ms = 0.0;

  bool pass() const { return worst_margin >= -tol; }
};

/// FNV-1a over the raw bytes of the instance data, rendered as 16 hex digits.
class InstanceDigest {
 public:
  InstanceDigest& add(const ComplexMatrix& m);
  InstanceDigest& add(double x);
  InstanceDigest& add(std::uint64_t x);
  std::string hex() const;

 private:
  void bytes(const void* p, std::size_t n);
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

// ---- joint convexity ----

struct ConvexityInstance {
  std::vector<double> weights;
  std::vector<HermitianMatrix> p;
  std::vector<HermitianMatrix> q;
  /// Throws on a bad simplex (sum off by more than 1e-12, negative entries)
  /// or mismatched lists.
  void validate() const;
};

struct JointConvexity {
  double margin;              // sum x_j H(P_j, Q_j) - H(sum x_j P_j, sum x_j Q_j)
  double subadditive_margin;  // sum H(P_j, Q_j) - H(sum P_j, sum Q_j)
  double scaled_margin;       // subadditivity applied to (x_j P_j, x_j Q_j)
  double homogeneity_gap;     // |sum H(x_j P_j, x_j Q_j) - sum x_j H(P_j, Q_j)|
};

/// nullopt when any relative entropy involved is infinite.
std::optional<JointConvexity> check_joint_convexity(const ConvexityInstance& inst);

// ---- Schwarz family ----

/// sum_j Tr A_j^dagger (L_{P_j} + t R_{Q_j})^{-1}(A_j) minus the same with the summed arguments.
double check_schwarz_quadratic(const std::vector<ComplexMatrix>& a, const std::vector<HermitianMatrix>& p,
                               const std::vector<HermitianMatrix>& q, double t);

/// lambda_min(sum A_k^dagger P_k^{-1} A_k - (sum A_k)^dagger (sum P_k)^{-1} (sum A_k)).
/// Singular P_k is accepted when range(A_k) lies in range(P_k); otherwise
/// KernelObstruction.
double check_operator_schwarz(const std::vector<ComplexMatrix>& a, const std::vector<HermitianMatrix>& p);

struct CpSchwarzMargins {
  double cscp;  // lambda_min(Phi(A^dag P^-1 A) - Phi(A)^dag Phi(P)^-1 Phi(A))
  double csab;  // lambda_min(Phi(A^dag A) - Phi(A^dag B) Phi(B^dag B)^-1 Phi(B^dag A))
};
CpSchwarzMargins check_cp_schwarz(const KrausMap& phi, const ComplexMatrix& a, const ComplexMatrix& b,
                                  const HermitianMatrix& p);

struct BlockContraction {
  double block_min_eig;  // lambda_min [[P, C], [C^dag, Q]]
  double schur_min_eig;  // lambda_min(Q - C^dag P^-1 C)
  double sigma_max;      // largest singular value of P^{-1/2} C Q^{-1/2}
  bool block_psd;
  bool schur_psd;
  bool contraction;
  bool indeterminate;  // some quantity within tol of its threshold
  bool agree() const { return block_psd == schur_psd && schur_psd == contraction; }
};
BlockContraction check_block_contraction(const HermitianMatrix& p, const HermitianMatrix& q, const ComplexMatrix& c,
                                         double tol = kDefaultTol);

// ---- monotonicity ----

struct Dephasing {};
struct PartialTrace {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> keep;
};
using MonotonicityMap = std::variant<Dephasing, PartialTrace, KrausMap>;

/// H(rho, gamma) - H(Phi rho, Phi gamma); nullopt when H(rho, gamma) is infinite.
std::optional<double> check_monotonicity(const DensityMatrix& rho, const DensityMatrix& gamma,
                                         const MonotonicityMap& map);

// ---- strong subadditivity ----

struct SsaMargins {
  double primary;  // S(AB) + S(BC) - S(ABC) - S(B)
  double alt;      // S(AB) + S(AD) - S(B) - S(D), third factor read as D
  double f_value;  // F(rho_ABD); same quantity as alt
};
SsaMargins check_ssa(const DensityMatrix& rho_abc, const std::vector<std::size_t>& dims);

/// The SSA margin reached through monotonicity under Tr_C with
/// gamma = I_A/d_A (x) rho_BC. Equals check_ssa(...).primary.
double ssa_via_monotonicity(const DensityMatrix& rho_abc, const std::vector<std::size_t>& dims);

/// check_ssa(...).alt evaluated on Tr_C of a purification of rho_ABC, the
/// purifying system playing the role of D. Equals the primary margin.
double ssa_alt_via_purification(const DensityMatrix& rho_abc, const std::vector<std::size_t>& dims);

// ---- concavity ----

/// f(rho) = S(rho_AB) - S(rho_A).
struct ConditionalEntropyF {
  std::vector<std::size_t> dims;
};
/// f(rho) = S(rho) - S(Phi(rho)).
struct EntropyDiffF {
  KrausMap phi;
};
using ConcaveFunction = std::variant<ConditionalEntropyF, EntropyDiffF>;

/// f(sum x_i rho_i) - sum x_i f(rho_i).
double check_concavity(const ConcaveFunction& f, const std::vector<DensityMatrix>& states,
                       const std::vector<double>& weights);

// ---- pure states ----

struct PureStateLemmas {
  double spectra_distance;  // max gap between sorted nonzero spectra of rho_A and rho_B
  double entropy_gap;       // |S(rho_A) - S(rho_B)|
};
PureStateLemmas check_pure_state_lemmas(const ComplexVector& psi_ab, const std::vector<std::size_t>& dims);

// ---- adjoint chain ----

/// With X = (L_{Phi(P)} + t R_{Phi(Q)})^{-1}(Phi(A)) and Phi^ the adjoint map:
/// Tr X^dag (L_{Phi(P)} + t R_{Phi(Q)}) X - Tr Phi^(X)^dag (L_P + t R_Q) Phi^(X).
double check_adjoint_quadratic(const KrausMap& phi, const HermitianMatrix& p, const HermitianMatrix& q,
                               const ComplexMatrix& a, double t);

}  // namespace entropion
