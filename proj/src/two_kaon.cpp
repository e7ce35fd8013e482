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

#include "kaoncp/two_kaon.hpp"

#include <cmath>

#include "kaoncp/bloch.hpp"
#include "kaoncp/error.hpp"

namespace kaoncp {

SingletState singlet() {
  CMatrix pauli_sum = tensor_product(CMatrix(pauli(0)), CMatrix(pauli(0)));
  for (int i = 1; i <= 3; ++i) {
    pauli_sum -= tensor_product(CMatrix(pauli(i)), CMatrix(pauli(i)));
  }
  pauli_sum *= 0.25;

  // Index 2*i + j for |K_i> (x) |K_j>.
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  const CMatrix outer = psi * psi.adjoint();

  if ((pauli_sum - outer).cwiseAbs().maxCoeff() > 1e-15) {
    throw DomainError("singlet: Pauli-sum and vector constructions disagree");
  }
  return {pauli_sum, psi};
}

WitnessVectors witness_vectors() {
  WitnessVectors w;
  w.u << 1.0, 0.0, 0.0, 1.0;
  w.v << 0.0, 1.0, 1.0, 0.0;
  return w;
}

double expectation(const CMatrix& rho, const Eigen::Vector4cd& x) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw ShapeError("expectation: expected a 4x4 two-kaon operator");
  }
  return (x.adjoint() * rho * x)(0, 0).real();
}

namespace {

void require_single(const EvolutionMap& m, const char* what) {
  if (m.dim() != 4) {
    throw ShapeError(std::string(what) + ": expected a single-kaon 4x4 map");
  }
}

}  // namespace

EvolutionMap product_evolution(const EvolutionMap& single) {
  require_single(single, "product_evolution");
  return {tensor_product(single.bloch, single.bloch), single.time,
          Provenance::Product, single.trotter_steps};
}

EvolutionMap extend_with_identity(const EvolutionMap& single) {
  require_single(single, "extend_with_identity");
  return {tensor_product(single.bloch, RMatrix(RMatrix::Identity(4, 4))),
          single.time, Provenance::Product, single.trotter_steps};
}

CMatrix apply_two_kaon(const EvolutionMap& map, const CMatrix& rho) {
  if (map.dim() != 16) {
    throw ShapeError("apply_two_kaon: expected a 16x16 two-kaon map");
  }
  const Eigen::VectorXd out = map.bloch * flatten(two_body_to_bloch(rho));
  return two_body_from_bloch(unflatten(out));
}

TwoKaonWitness two_kaon_witness(double alpha, double beta, double gamma,
                                double t) {
  const TauClosedForm tau(alpha, beta, gamma);
  const EvolutionMap single = tau_closed_form(alpha, beta, gamma, t);
  const CMatrix evolved = apply_two_kaon(product_evolution(single), singlet().matrix);
  const WitnessVectors w = witness_vectors();
  const double a = tau.A(t);
  const double c = tau.C(t);
  return {expectation(evolved, w.u), expectation(evolved, w.v),
          0.5 * (a * a - c * c)};
}

namespace {

EvolutionMap composite_step(const EffectiveHamiltonian& h, double alpha,
                            double beta, double gamma, double t, int n) {
  const Eigen::Matrix4d ww = weisskopf_wigner_generator(h);
  const MapBuilder w = [&](double s) {
    return product_evolution(expm_evolution(ww, s));
  };
  const MapBuilder tt = [&](double s) {
    return product_evolution(tau_closed_form(alpha, beta, gamma, s));
  };
  return trotter_compose(w, tt, t, n);
}

}  // namespace

CMatrix trotter_singlet_state(const EffectiveHamiltonian& h, double alpha,
                              double beta, double gamma, double t, int n) {
  return apply_two_kaon(composite_step(h, alpha, beta, gamma, t, n),
                        singlet().matrix);
}

NegativeMassBound trotter_negative_mass_bound(const EffectiveHamiltonian& h,
                                              double alpha, double beta,
                                              double gamma, double t, int n) {
  if (n < 1) throw InvalidArgument("trotter_negative_mass_bound: n must be >= 1");
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("trotter_negative_mass_bound: time must be non-negative");
  }
  // Validates the simple-positivity preconditions.
  const TauClosedForm tau(alpha, beta, gamma);

  NegativeMassBound out;
  out.degenerate = alpha == gamma && beta == 0.0;

  const CMatrix final_state = trotter_singlet_state(h, alpha, beta, gamma, t, n);
  const PsdReport psd = psd_check(final_state);
  out.min_eigenvalue = psd.min_eigenvalue;
  out.trace = final_state.trace().real();
  out.lhs = negative_mass(final_state);

  const CMatrix first_step =
      trotter_singlet_state(h, alpha, beta, gamma, t / n, 1);
  out.rho_minus_trace = signed_decompose(first_step).negative_part.trace().real();
  out.rhs = std::exp(-2.0 * h.lambda_max() * t) * std::abs(out.rho_minus_trace);
  out.holds = out.lhs >= out.rhs - kBoundTolerance;
  return out;
}

}  // namespace kaoncp
