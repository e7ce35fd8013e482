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

// Builders for the kaon evolution generator: the Weisskopf-Wigner part
// -i H rho + i rho H^dagger and the dissipative part, either from its six
// phenomenological parameters or from explicit Lindblad operators. All
// results are real 4x4 Bloch-space matrices.

#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kaoncp/matrix.hpp"

namespace kaoncp {

// Entries of the symmetric dissipative block; rates share the time unit of H.
struct DissipativeParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  // Throws DomainError if a, alpha or gamma is negative or any entry is
  // not finite.
  void validate() const;

  // 3x3 block D so that the dissipator is -2 * diag(0, D).
  Eigen::Matrix3d block() const;

  bool has_abc() const { return a != 0.0 || b != 0.0 || c != 0.0; }
};

class EffectiveHamiltonian {
 public:
  // Arbitrary 2x2 complex H in the {K1, K2} basis.
  static EffectiveHamiltonian from_matrix(const CMatrix& h);

  // H = diag(m_S - i Gamma_S / 2, m_L - i Gamma_L / 2): K1 is the short-lived
  // mode, CP violation neglected.
  static EffectiveHamiltonian from_kaon_widths(double m_short, double m_long,
                                               double width_short,
                                               double width_long);

  const Eigen::Matrix2cd& matrix() const { return h_; }
  // (H + H^dagger) / 2
  Eigen::Matrix2cd mass() const;
  // i (H - H^dagger), Hermitian by construction.
  Eigen::Matrix2cd width() const;
  // Largest eigenvalue of the width matrix.
  double lambda_max() const;
  bool width_is_psd() const;

 private:
  explicit EffectiveHamiltonian(const Eigen::Matrix2cd& h) : h_(h) {}
  Eigen::Matrix2cd h_;
};

struct LindbladOperators {
  std::vector<Eigen::Matrix2cd> ops;

  bool hermitian() const;
  // R = sum_j A_j^dagger A_j
  Eigen::Matrix2cd relaxation() const;
};

struct Inequality {
  std::string name;
  double margin = 0.0;  // right-hand side minus left-hand side
  bool passed = false;
};

struct CpInequalityReport {
  std::array<Inequality, 6> items;

  bool all_passed() const;
  double min_margin() const;
};

Eigen::Matrix4d dissipator_matrix(const DissipativeParams& p);

// The six necessary conditions on the parameters for a completely positive
// semigroup, evaluated as written; margins may be negative.
CpInequalityReport cp_inequalities(const DissipativeParams& p);

// The Bloch flow x -> exp(t T) x stays inside the Bloch ball for every t >= 0
// iff the symmetric block D is positive semidefinite (for a = b = c = 0 this
// is alpha, gamma >= 0 and alpha * gamma >= beta^2).
bool generates_positive_semigroup(const DissipativeParams& p);

// rho -> -1/2 (R rho + rho R) + sum_j A_j rho A_j^dagger
Eigen::Matrix4d lindblad_dissipator(const LindbladOperators& l);

// rho -> -i H rho + i rho H^dagger
Eigen::Matrix4d weisskopf_wigner_generator(const EffectiveHamiltonian& h);

Eigen::Matrix4d full_generator(const EffectiveHamiltonian& h,
                               const DissipativeParams& p);

}  // namespace kaoncp
