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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kaoncp/evolution.hpp"
#include "kaoncp/matrix.hpp"

namespace kaoncp {

struct DecayObservable {
  std::string name;
  CMatrix op;                       // PSD 2x2, non-zero
  std::optional<CMatrix> conjugate; // final state for the Kbar channel

  void validate() const;
};

// Leading-order CP projectors: 2pi <- |K1><K1|, 3pi <- |K2><K2|.
DecayObservable two_pion();
DecayObservable three_pion();

struct ObservableSeries {
  std::vector<double> times;
  std::vector<double> values;
  // Set when a value is negative, i.e. the evolved state is not positive.
  std::vector<bool> non_physical;
};

struct AsymmetrySeries {
  ObservableSeries series;
  std::optional<std::string> warning;  // set when the series was truncated
};

// t -> single-kaon map at time t.
using EvolutionFamily = std::function<EvolutionMap(double)>;

EvolutionFamily exponential_family(const RMatrix& generator);
EvolutionFamily closed_form_family(double alpha, double beta, double gamma);

// Tr[rho(t) O] / Tr[rho(0) O]
ObservableSeries decay_rate(const CMatrix& rho0, const DecayObservable& o,
                            const EvolutionFamily& evolution,
                            const std::vector<double>& times);

// (Tr[rho_Kbar(t) O_fbar] - Tr[rho_K(t) O_f]) / (sum of the same)
AsymmetrySeries asymmetry(const CMatrix& o_f, const CMatrix& o_fbar,
                          const EvolutionFamily& evolution,
                          const std::vector<double>& times);

}  // namespace kaoncp
