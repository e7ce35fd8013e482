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

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "kaoncp/matrix.hpp"

namespace kaoncp {

enum class Provenance { Identity, ClosedForm, Exponential, Trotter, Product };

std::string to_string(Provenance p);

// A linear map on kaon states in Bloch form: 4x4 for one kaon, 16x16 on the
// flattened two-kaon product basis.
struct EvolutionMap {
  RMatrix bloch;
  double time = 0.0;
  Provenance provenance = Provenance::Identity;
  int trotter_steps = 0;

  static EvolutionMap identity(Eigen::Index dim);

  Eigen::Index dim() const { return bloch.rows(); }
  RVector apply(const RVector& components) const;
};

// Closed-form semigroup generated by the dissipator with a = b = c = 0:
// it acts as the identity on rho^0, rho^1 and as [[A, B], [B, C]] on
// (rho^2, rho^3).
class TauClosedForm {
 public:
  // Throws DomainError unless alpha, gamma >= 0 and alpha * gamma >= beta^2.
  TauClosedForm(double alpha, double beta, double gamma);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double lambda_plus() const { return mean_ + half_gap_; }
  double lambda_minus() const { return mean_ - half_gap_; }
  // True when the two rates coincide to within the switch-over threshold and
  // the coincident-eigenvalue limit is used.
  bool degenerate() const { return degenerate_; }

  double A(double t) const;
  double B(double t) const;
  double C(double t) const;

  Eigen::Matrix4d matrix(double t) const;

 private:
  // e^{mean t} sinh(half_gap t) / half_gap, with its t e^{mean t} limit.
  double sinh_term(double t) const;
  // e^{mean t} cosh(half_gap t)
  double cosh_term(double t) const;

  double alpha_, beta_, gamma_;
  double mean_;      // -(alpha + gamma)
  double half_gap_;  // sqrt((alpha - gamma)^2 + 4 beta^2)
  bool degenerate_;
};

EvolutionMap tau_closed_form(double alpha, double beta, double gamma, double t);

// exp(m) by scaling and squaring a truncated Taylor series.
RMatrix expm(const RMatrix& m);

EvolutionMap expm_evolution(const RMatrix& generator, double t);

using MapBuilder = std::function<EvolutionMap(double)>;

// (W_{t/n} o T_{t/n})^n: within each step T acts first, then W.
EvolutionMap trotter_compose(const MapBuilder& w, const MapBuilder& t_map,
                             double t, int n);

}  // namespace kaoncp
