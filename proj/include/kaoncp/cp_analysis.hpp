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

// Operational complete-positivity tests for single-kaon maps: the Choi
// matrix, Kraus extraction from it, and the entangled-probe witness
// (Phi (x) id)[rho_S].

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "kaoncp/evolution.hpp"
#include "kaoncp/matrix.hpp"

namespace kaoncp {

// Choi = sum_ij Phi(|i><j|) (x) |i><j|, i.e. (Phi (x) id) applied to the
// unnormalized |Omega><Omega|, |Omega> = sum_i |i>|i> (trace 2 reference).
// Row/column index is 2 * output + input.
struct ChoiMatrix {
  CMatrix matrix;
};

struct KrausSet {
  std::vector<Eigen::Matrix2cd> ops;
  // ||sum_j V_j^dagger V_j - Phi'(1)||_F, Phi' the dual map.
  double completeness_defect = 0.0;

  CMatrix apply(const CMatrix& rho) const;
};

struct CpCheck {
  bool completely_positive = false;
  double min_choi_eigenvalue = 0.0;
};

struct ExtensionWitness {
  double value_u = 0.0;
  double value_v = 0.0;
  double min_eigenvalue = 0.0;
};

ChoiMatrix choi_of_map(const EvolutionMap& map);

CpCheck is_completely_positive(const EvolutionMap& map);

// Throws NotPositive (carrying the offending eigenvalue) for non-PSD input.
KrausSet kraus_from_choi(const ChoiMatrix& choi);

ExtensionWitness extension_witness(const EvolutionMap& map);

}  // namespace kaoncp
