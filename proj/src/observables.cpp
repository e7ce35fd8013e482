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

#include "kaoncp/observables.hpp"

#include <cmath>
#include <sstream>

#include "kaoncp/bloch.hpp"
#include "kaoncp/error.hpp"

namespace kaoncp {

namespace {

void require_times(const std::vector<double>& times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] < 0.0) {
      throw DomainError("observable times must be finite and non-negative");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw InvalidArgument("observable times must be strictly ascending");
    }
  }
}

void require_psd_operator(const CMatrix& op, const std::string& name) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw ShapeError("observable '" + name + "' must be a 2x2 operator");
  }
  require_hermitian(op, ("observable '" + name + "'").c_str());
  if (op.norm() == 0.0) {
    throw InvalidArgument("observable '" + name + "' is the zero operator");
  }
  const PsdReport r = psd_check(op);
  if (!r.is_psd) {
    throw NotPositive("observable '" + name + "' is not positive semidefinite",
                      r.min_eigenvalue);
  }
}

double expectation(const EvolutionMap& map, const CMatrix& rho0,
                   const CMatrix& op) {
  const BlochVector v0 = matrix_to_bloch(rho0);
  BlochVector vt;
  vt.components = map.bloch * v0.components;
  return (bloch_to_matrix(vt) * op).trace().real();
}

}  // namespace

void DecayObservable::validate() const {
  require_psd_operator(op, name);
  if (conjugate) require_psd_operator(*conjugate, name + " (conjugate)");
}

DecayObservable two_pion() {
  return {"2pi", kaon_basis::projector(kaon_basis::k1()), std::nullopt};
}

DecayObservable three_pion() {
  return {"3pi", kaon_basis::projector(kaon_basis::k2()), std::nullopt};
}

EvolutionFamily exponential_family(const RMatrix& generator) {
  return [generator](double t) { return expm_evolution(generator, t); };
}

EvolutionFamily closed_form_family(double alpha, double beta, double gamma) {
  // Validate eagerly rather than on first use.
  (void)TauClosedForm(alpha, beta, gamma);
  return [=](double t) { return tau_closed_form(alpha, beta, gamma, t); };
}

ObservableSeries decay_rate(const CMatrix& rho0, const DecayObservable& o,
                            const EvolutionFamily& evolution,
                            const std::vector<double>& times) {
  o.validate();
  require_times(times);
  require_hermitian(rho0, "initial state");
  const double denom = (rho0 * o.op).trace().real();
  if (!(std::abs(denom) > 1e-14 * rho0.norm() * o.op.norm())) {
    throw DomainError("decay_rate: Tr[rho(0) O] vanishes for observable '" +
                      o.name + "'");
  }
  ObservableSeries out;
  for (double t : times) {
    // rho(0) is mapped exactly onto itself; keep value(0) = 1 bit-exact.
    const double value =
        t == 0.0 ? 1.0 : expectation(evolution(t), rho0, o.op) / denom;
    out.times.push_back(t);
    out.values.push_back(value);
    out.non_physical.push_back(value < 0.0);
  }
  return out;
}

AsymmetrySeries asymmetry(const CMatrix& o_f, const CMatrix& o_fbar,
                          const EvolutionFamily& evolution,
                          const std::vector<double>& times) {
  require_psd_operator(o_f, "O_f");
  require_psd_operator(o_fbar, "O_fbar");
  require_times(times);
  const CMatrix rho_k = kaon_basis::projector(kaon_basis::k());
  const CMatrix rho_kbar = kaon_basis::projector(kaon_basis::kbar());

  AsymmetrySeries out;
  for (double t : times) {
    const EvolutionMap map = evolution(t);
    const double from_kbar = expectation(map, rho_kbar, o_fbar);
    const double from_k = expectation(map, rho_k, o_f);
    const double den = from_kbar + from_k;
    const double scale = std::abs(from_kbar) + std::abs(from_k);
    if (!(std::abs(den) > 1e-14 * scale) || den == 0.0) {
      std::ostringstream os;
      os << "asymmetry: denominator vanishes at t=" << t
         << "; series truncated";
      out.warning = os.str();
      break;
    }
    const double value = (from_kbar - from_k) / den;
    out.series.times.push_back(t);
    out.series.values.push_back(value);
    out.series.non_physical.push_back(from_kbar < 0.0 || from_k < 0.0);
  }
  return out;
}

}  // namespace kaoncp
