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

#include "kaoncp/bloch.hpp"

#include <cmath>
#include <sstream>

#include "kaoncp/error.hpp"

namespace kaoncp {

namespace {

constexpr Complex kI{0.0, 1.0};

std::array<Eigen::Matrix2cd, 4> make_pauli() {
  std::array<Eigen::Matrix2cd, 4> s;
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -kI, kI, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

void require_shape(const CMatrix& m, Eigen::Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    std::ostringstream os;
    os << what << ": expected " << dim << "x" << dim << ", got " << m.rows()
       << "x" << m.cols();
    throw ShapeError(os.str());
  }
}

}  // namespace

const Eigen::Matrix2cd& pauli(int index) {
  static const std::array<Eigen::Matrix2cd, 4> basis = make_pauli();
  if (index < 0 || index > 3) {
    throw InvalidArgument("pauli: index must be in 0..3");
  }
  return basis[static_cast<std::size_t>(index)];
}

namespace kaon_basis {

Eigen::Vector2cd k1() { return Eigen::Vector2cd(1.0, 0.0); }
Eigen::Vector2cd k2() { return Eigen::Vector2cd(0.0, 1.0); }
Eigen::Vector2cd k() { return (k1() + k2()) / std::sqrt(2.0); }
Eigen::Vector2cd kbar() { return (k1() - k2()) / std::sqrt(2.0); }

CMatrix projector(const Eigen::Vector2cd& state) {
  return state * state.adjoint();
}

}  // namespace kaon_basis

BlochVector matrix_to_bloch(const CMatrix& rho) {
  require_shape(rho, 2, "matrix_to_bloch");
  require_hermitian(rho, "matrix_to_bloch input");
  BlochVector v;
  for (int mu = 0; mu < 4; ++mu) {
    v.components(mu) = 0.5 * (pauli(mu) * rho).trace().real();
  }
  return v;
}

CMatrix bloch_to_matrix(const BlochVector& v) {
  CMatrix rho = CMatrix::Zero(2, 2);
  for (int mu = 0; mu < 4; ++mu) rho += v.components(mu) * pauli(mu);
  return rho;
}

RMatrix superop_to_bloch(const PauliImages& images) {
  RMatrix f(4, 4);
  for (int nu = 0; nu < 4; ++nu) {
    const CMatrix& img = images[static_cast<std::size_t>(nu)];
    require_shape(img, 2, "superop_to_bloch image");
    const double defect = hermiticity_defect(img);
    if (defect > kHermitianTolerance * std::max(1.0, img.norm())) {
      std::ostringstream os;
      os.precision(3);
      os << "superop_to_bloch: map is not Hermiticity-preserving, image of "
            "sigma_"
         << nu << " has defect " << defect;
      throw NotHermitian(os.str(), defect);
    }
    for (int mu = 0; mu < 4; ++mu) {
      f(mu, nu) = 0.5 * (pauli(mu) * img).trace().real();
    }
  }
  return f;
}

RMatrix superop_to_bloch(const SuperOperator& map) {
  PauliImages images;
  for (int nu = 0; nu < 4; ++nu) {
    images[static_cast<std::size_t>(nu)] = map(pauli(nu));
  }
  return superop_to_bloch(images);
}

CMatrix apply_bloch_map(const RMatrix& bloch, const CMatrix& op) {
  if (bloch.rows() != 4 || bloch.cols() != 4) {
    throw ShapeError("apply_bloch_map: expected a 4x4 Bloch matrix");
  }
  require_shape(op, 2, "apply_bloch_map operand");
  Eigen::Vector4cd c;
  for (int mu = 0; mu < 4; ++mu) c(mu) = 0.5 * (pauli(mu) * op).trace();
  const Eigen::Vector4cd d = bloch.cast<Complex>() * c;
  CMatrix out = CMatrix::Zero(2, 2);
  for (int mu = 0; mu < 4; ++mu) out += d(mu) * pauli(mu);
  return out;
}

Eigen::Matrix4d two_body_to_bloch(const CMatrix& rho) {
  require_shape(rho, 4, "two_body_to_bloch");
  require_hermitian(rho, "two_body_to_bloch input");
  Eigen::Matrix4d r;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const CMatrix basis = tensor_product(CMatrix(pauli(mu)), CMatrix(pauli(nu)));
      r(mu, nu) = 0.25 * (basis * rho).trace().real();
    }
  }
  return r;
}

CMatrix two_body_from_bloch(const Eigen::Matrix4d& coefficients) {
  CMatrix rho = CMatrix::Zero(4, 4);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (coefficients(mu, nu) == 0.0) continue;
      rho += coefficients(mu, nu) *
             tensor_product(CMatrix(pauli(mu)), CMatrix(pauli(nu)));
    }
  }
  return rho;
}

Eigen::VectorXd flatten(const Eigen::Matrix4d& coefficients) {
  Eigen::VectorXd out(16);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) out(4 * mu + nu) = coefficients(mu, nu);
  }
  return out;
}

Eigen::Matrix4d unflatten(const Eigen::VectorXd& components) {
  if (components.size() != 16) {
    throw ShapeError("unflatten: expected 16 two-kaon components");
  }
  Eigen::Matrix4d out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) out(mu, nu) = components(4 * mu + nu);
  }
  return out;
}

}  // namespace kaoncp
