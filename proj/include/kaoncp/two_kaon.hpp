// Copyright 2026 The kaoncp Authors
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

// Entangled two-kaon dynamics on the antisymmetric (singlet) state produced in
// phi decays: product evolutions, the u/v probe witness and the negative-mass
// persistence bound for Trotter-composed dynamics.

#pragma once

#include <Eigen/Dense>

#include "kaoncp/evolution.hpp"
#include "kaoncp/generators.hpp"
#include "kaoncp/matrix.hpp"

namespace kaoncp {

struct SingletState {
  CMatrix matrix;            // (s0 s0 - sum_i si si) / 4
  Eigen::Vector4cd vector;   // (|K1 K2> - |K2 K1>) / sqrt2
};

// Throws if the Pauli-sum and outer-product constructions disagree.
SingletState singlet();

// Unnormalized probes |u> = |00> + |11>, |v> = |01> + |10>.
struct WitnessVectors {
  Eigen::Vector4cd u;
  Eigen::Vector4cd v;
};

WitnessVectors witness_vectors();

// <x| rho |x>
double expectation(const CMatrix& rho, const Eigen::Vector4cd& x);

// Phi (x) Phi on the flattened product basis.
EvolutionMap product_evolution(const EvolutionMap& single);

// Phi (x) id for a single-kaon Bloch map.
EvolutionMap extend_with_identity(const EvolutionMap& single);

// Applies a 16x16 product-basis map to a 4x4 two-kaon operator.
CMatrix apply_two_kaon(const EvolutionMap& map, const CMatrix& rho);

struct TwoKaonWitness {
  double value_u = 0.0;
  double value_v = 0.0;
  double closed_form = 0.0;  // (A^2 - C^2) / 2
};

// Probes (tau_t (x) tau_t)[rho_S] with the u/v vectors.
TwoKaonWitness two_kaon_witness(double alpha, double beta, double gamma,
                                double t);

struct NegativeMassBound {
  double lhs = 0.0;               // negative mass after n composite steps
  double rhs = 0.0;               // e^{-2 lambda t} |Tr(rho_-)|
  bool holds = false;
  double rho_minus_trace = 0.0;   // Tr(rho_-) after the first step, <= 0
  double min_eigenvalue = 0.0;    // of the n-step state
  double trace = 0.0;             // of the n-step state
  bool degenerate = false;        // alpha == gamma and beta == 0
};

inline constexpr double kBoundTolerance = 1e-10;
// Default horizon for persistence scans, in units of the short lifetime.
inline constexpr double kDefaultTMax = 10.0;

// Two-kaon state (W_{t/n} o T_{t/n})^n [rho_S], W the Weisskopf-Wigner
// product map and T = tau (x) tau.
CMatrix trotter_singlet_state(const EffectiveHamiltonian& h, double alpha,
                              double beta, double gamma, double t, int n);

// At t = 0 both sides vanish and the bound holds trivially.
NegativeMassBound trotter_negative_mass_bound(const EffectiveHamiltonian& h,
                                              double alpha, double beta,
                                              double gamma, double t, int n);

}  // namespace kaoncp
