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

#include "kaoncp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kaoncp/bloch.hpp"
#include "kaoncp/error.hpp"

namespace kaoncp {

namespace {
constexpr Complex kI{0.0, 1.0};
}

void DissipativeParams::validate() const {
  for (double v : {a, b, c, alpha, beta, gamma}) {
    if (!std::isfinite(v)) {
      throw DomainError("dissipative parameters must be finite");
    }
  }
  std::ostringstream os;
  if (a < 0.0) os << " a=" << a;
  if (alpha < 0.0) os << " alpha=" << alpha;
  if (gamma < 0.0) os << " gamma=" << gamma;
  if (!os.str().empty()) {
    throw DomainError("dissipative parameters a, alpha, gamma must be "
                      "non-negative; got" + os.str());
  }
}

Eigen::Matrix3d DissipativeParams::block() const {
  Eigen::Matrix3d d;
  d << a, b, c,
       b, alpha, beta,
       c, beta, gamma;
  return d;
}

EffectiveHamiltonian EffectiveHamiltonian::from_matrix(const CMatrix& h) {
  if (h.rows() != 2 || h.cols() != 2) {
    throw ShapeError("effective Hamiltonian must be 2x2");
  }
  if (!h.allFinite()) {
    throw DomainError("effective Hamiltonian has non-finite entries");
  }
  return EffectiveHamiltonian(Eigen::Matrix2cd(h));
}

EffectiveHamiltonian EffectiveHamiltonian::from_kaon_widths(
    double m_short, double m_long, double width_short, double width_long) {
  Eigen::Matrix2cd h = Eigen::Matrix2cd::Zero();
  h(0, 0) = Complex(m_short, -0.5 * width_short);
  h(1, 1) = Complex(m_long, -0.5 * width_long);
  return from_matrix(h);
}

Eigen::Matrix2cd EffectiveHamiltonian::mass() const {
  return 0.5 * (h_ + h_.adjoint());
}

Eigen::Matrix2cd EffectiveHamiltonian::width() const {
  return kI * (h_ - h_.adjoint());
}

double EffectiveHamiltonian::lambda_max() const {
  return hermitian_eigen(width()).eigenvalues(1);
}

bool EffectiveHamiltonian::width_is_psd() const {
  return psd_check(width()).is_psd;
}

bool LindbladOperators::hermitian() const {
  return std::all_of(ops.begin(), ops.end(), [](const Eigen::Matrix2cd& m) {
    return hermiticity_defect(m) <= kHermitianTolerance * m.norm();
  });
}

Eigen::Matrix2cd LindbladOperators::relaxation() const {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  for (const auto& op : ops) r += op.adjoint() * op;
  return r;
}

bool CpInequalityReport::all_passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const Inequality& q) { return q.passed; });
}

double CpInequalityReport::min_margin() const {
  double m = items[0].margin;
  for (const auto& q : items) m = std::min(m, q.margin);
  return m;
}

Eigen::Matrix4d dissipator_matrix(const DissipativeParams& p) {
  p.validate();
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  t.bottomRightCorner<3, 3>() = -2.0 * p.block();
  return t;
}

CpInequalityReport cp_inequalities(const DissipativeParams& p) {
  const double a = p.a, b = p.b, c = p.c;
  const double al = p.alpha, be = p.beta, ga = p.gamma;
  auto make = [](const char* name, double margin) {
    return Inequality{name, margin, margin >= 0.0};
  };
  CpInequalityReport r;
  r.items[0] = make("a <= alpha + gamma", al + ga - a);
  r.items[1] = make("alpha <= a + gamma", a + ga - al);
  r.items[2] = make("gamma <= a + alpha", a + al - ga);
  r.items[3] = make("4b^2 <= gamma^2 - (a - alpha)^2",
                    ga * ga - (a - al) * (a - al) - 4.0 * b * b);
  r.items[4] = make("4c^2 <= alpha^2 - (a - gamma)^2",
                    al * al - (a - ga) * (a - ga) - 4.0 * c * c);
  r.items[5] = make("4beta^2 <= a^2 - (alpha - gamma)^2",
                    a * a - (al - ga) * (al - ga) - 4.0 * be * be);
  return r;
}

bool generates_positive_semigroup(const DissipativeParams& p) {
  p.validate();
  const Eigen::Matrix3d d = p.block();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(d);
  const double scale = std::max(1.0, d.norm());
  return solver.eigenvalues()(0) >= -kPsdTolerance * scale;
}

Eigen::Matrix4d lindblad_dissipator(const LindbladOperators& l) {
  const Eigen::Matrix2cd r = l.relaxation();
  const SuperOperator map = [&](const CMatrix& rho) -> CMatrix {
    CMatrix out = -0.5 * (r * rho + rho * r);
    for (const auto& op : l.ops) out += op * rho * op.adjoint();
    return out;
  };
  return superop_to_bloch(map);
}

Eigen::Matrix4d weisskopf_wigner_generator(const EffectiveHamiltonian& h) {
  const Eigen::Matrix2cd& hm = h.matrix();
  const SuperOperator map = [&](const CMatrix& rho) -> CMatrix {
    return -kI * hm * rho + kI * rho * hm.adjoint();
  };
  return superop_to_bloch(map);
}

Eigen::Matrix4d full_generator(const EffectiveHamiltonian& h,
                               const DissipativeParams& p) {
  return weisskopf_wigner_generator(h) + dissipator_matrix(p);
}

}  // namespace kaoncp
