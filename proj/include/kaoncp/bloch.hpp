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

// Pauli-basis (Bloch) representation of kaon states and of linear maps on
// them. A 2x2 operator is written rho = rho^mu sigma_mu with
// rho^mu = Tr(sigma_mu rho) / 2, so a Hermiticity-preserving map becomes a
// real 4x4 matrix F with (Phi[rho])^mu = F(mu, nu) rho^nu.
//
// Two-kaon operators use the product basis sigma_mu (x) sigma_nu with
// coefficients R(mu, nu) = Tr((sigma_mu (x) sigma_nu) rho) / 4, flattened
// row-major into 16 components. A product map Phi (x) Psi then acts as the
// Kronecker product of the two 4x4 matrices.

#pragma once

#include <array>
#include <functional>

#include <Eigen/Dense>

#include "kaoncp/matrix.hpp"

namespace kaoncp {

struct BlochVector {
  Eigen::Vector4d components = Eigen::Vector4d::Zero();

  double trace() const { return 2.0 * components(0); }
  // |(rho^1, rho^2, rho^3)|
  double spatial_norm() const { return components.tail<3>().norm(); }
};

// sigma_0 (identity), sigma_1, sigma_2, sigma_3.
const Eigen::Matrix2cd& pauli(int index);

// Fixed embedding |K1> = (1, 0), |K2> = (0, 1); strangeness eigenstates
// |K> = (|K1> + |K2>)/sqrt2, |Kbar> = (|K1> - |K2>)/sqrt2.
namespace kaon_basis {
Eigen::Vector2cd k1();
Eigen::Vector2cd k2();
Eigen::Vector2cd k();
Eigen::Vector2cd kbar();
CMatrix projector(const Eigen::Vector2cd& state);
}  // namespace kaon_basis

BlochVector matrix_to_bloch(const CMatrix& rho);
CMatrix bloch_to_matrix(const BlochVector& v);

// Images Phi[sigma_nu], nu = 0..3.
using PauliImages = std::array<CMatrix, 4>;
using SuperOperator = std::function<CMatrix(const CMatrix&)>;

// Rejects maps whose images of the Hermitian Pauli basis are not Hermitian.
RMatrix superop_to_bloch(const PauliImages& images);
RMatrix superop_to_bloch(const SuperOperator& map);

// Applies a real Bloch matrix to an arbitrary (not necessarily Hermitian)
// 2x2 operator by complex-linear extension.
CMatrix apply_bloch_map(const RMatrix& bloch, const CMatrix& op);

// Two-kaon product-basis coefficients.
Eigen::Matrix4d two_body_to_bloch(const CMatrix& rho);
CMatrix two_body_from_bloch(const Eigen::Matrix4d& coefficients);
Eigen::VectorXd flatten(const Eigen::Matrix4d& coefficients);
Eigen::Matrix4d unflatten(const Eigen::VectorXd& components);

}  // namespace kaoncp
