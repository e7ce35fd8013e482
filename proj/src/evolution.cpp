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

#include "kaoncp/evolution.hpp"

#include <cmath>
#include <sstream>

#include "kaoncp/error.hpp"

namespace kaoncp {

namespace {

constexpr double kDegeneracyThreshold = 1e-9;

void require_time(double t, const char* what) {
  if (!std::isfinite(t) || t < 0.0) {
    std::ostringstream os;
    os << what << ": time must be finite and non-negative, got " << t;
    throw DomainError(os.str());
  }
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Identity: return "identity";
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Exponential: return "exponential";
    case Provenance::Trotter: return "trotter";
    case Provenance::Product: return "product";
  }
  return "unknown";
}

EvolutionMap EvolutionMap::identity(Eigen::Index dim) {
  return {RMatrix::Identity(dim, dim), 0.0, Provenance::Identity, 0};
}

RVector EvolutionMap::apply(const RVector& components) const {
  if (components.size() != dim()) {
    throw ShapeError("EvolutionMap::apply: component count does not match map");
  }
  return bloch * components;
}

TauClosedForm::TauClosedForm(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
    throw DomainError("tau_closed_form: parameters must be finite");
  }
  if (alpha < 0.0 || gamma < 0.0) {
    throw DomainError("tau_closed_form: alpha and gamma must be non-negative");
  }
  const double det = alpha * gamma - beta * beta;
  if (det < -1e-12 * (alpha * gamma + beta * beta)) {
    std::ostringstream os;
    os << "tau_closed_form: alpha*gamma < beta^2 (" << alpha * gamma << " < "
       << beta * beta << "), the map is not positive";
    throw DomainError(os.str());
  }
  mean_ = -(alpha + gamma);
  half_gap_ = std::hypot(alpha - gamma, 2.0 * beta);
  degenerate_ = half_gap_ < kDegeneracyThreshold * (alpha + gamma + 1.0);
}

double TauClosedForm::sinh_term(double t) const {
  if (degenerate_) return t * std::exp(mean_ * t);
  const double x = half_gap_ * t;
  if (x < 1.0) {
    return t * std::exp(mean_ * t) * (x == 0.0 ? 1.0 : std::sinh(x) / x);
  }
  // Split exponentials so that a large gap never overflows cosh/sinh.
  return (std::exp(lambda_plus() * t) - std::exp(lambda_minus() * t)) /
         (2.0 * half_gap_);
}

double TauClosedForm::cosh_term(double t) const {
  if (degenerate_) return std::exp(mean_ * t);
  return 0.5 * (std::exp(lambda_plus() * t) + std::exp(lambda_minus() * t));
}

double TauClosedForm::A(double t) const {
  return cosh_term(t) - (alpha_ - gamma_) * sinh_term(t);
}

double TauClosedForm::B(double t) const { return -2.0 * beta_ * sinh_term(t); }

double TauClosedForm::C(double t) const {
  return cosh_term(t) + (alpha_ - gamma_) * sinh_term(t);
}

Eigen::Matrix4d TauClosedForm::matrix(double t) const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(2, 2) = A(t);
  m(2, 3) = m(3, 2) = B(t);
  m(3, 3) = C(t);
  return m;
}

EvolutionMap tau_closed_form(double alpha, double beta, double gamma, double t) {
  require_time(t, "tau_closed_form");
  const TauClosedForm tau(alpha, beta, gamma);
  return {tau.matrix(t), t, Provenance::ClosedForm, 0};
}

RMatrix expm(const RMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("expm: matrix is not square");
  if (!m.allFinite()) throw DomainError("expm: non-finite entries");
  const auto n = m.rows();
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.25) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  }
  const RMatrix scaled = m / std::ldexp(1.0, squarings);

  // ||scaled||_1 <= 1/4, so 20 terms leave a remainder far below 1e-16.
  RMatrix result = RMatrix::Identity(n, n);
  RMatrix term = RMatrix::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-18 * result.cwiseAbs().maxCoeff()) {
      break;
    }
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

EvolutionMap expm_evolution(const RMatrix& generator, double t) {
  require_time(t, "expm_evolution");
  if (generator.rows() != generator.cols()) {
    throw ShapeError("expm_evolution: generator is not square");
  }
  return {expm(t * generator), t, Provenance::Exponential, 0};
}

EvolutionMap trotter_compose(const MapBuilder& w, const MapBuilder& t_map,
                             double t, int n) {
  require_time(t, "trotter_compose");
  if (n < 1) throw InvalidArgument("trotter_compose: n must be >= 1");
  const double dt = t / n;
  const EvolutionMap wm = w(dt);
  const EvolutionMap tm = t_map(dt);
  if (wm.dim() != tm.dim()) {
    throw ShapeError("trotter_compose: factor maps have different dimensions");
  }
  RMatrix step = wm.bloch * tm.bloch;
  RMatrix result = RMatrix::Identity(step.rows(), step.cols());
  // Binary powering of the composite step.
  for (int k = n; k > 0; k >>= 1) {
    if (k & 1) result = result * step;
    if (k > 1) step = step * step;
  }
  return {result, t, Provenance::Trotter, n};
}

}  // namespace kaoncp
