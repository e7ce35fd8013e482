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

// Dense complex linear algebra shared by every other module: Hermitian
// eigendecomposition, spectral splitting into positive and negative parts,
// Kronecker products and positivity tests. Dimensions here never exceed 16.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace kaoncp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

struct Spectrum {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // orthonormal columns, same order
};

struct SignedDecomposition {
  CMatrix positive_part;
  CMatrix negative_part;
};

struct PsdReport {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
};

// ||M - M^dagger||_F
double hermiticity_defect(const CMatrix& m);

// Throws NotHermitian unless the defect is within 1e-12 * ||M||_F. `what`
// names the operand in the error message.
void require_hermitian(const CMatrix& m, const char* what = "matrix");

// Eigenvalues below -psd_threshold(M) count as genuinely negative.
double psd_threshold(const CMatrix& m);

Spectrum hermitian_eigen(const CMatrix& m);

SignedDecomposition signed_decompose(const CMatrix& m);

// |Tr(negative part)|, counting only eigenvalues below -psd_threshold.
double negative_mass(const CMatrix& m);

PsdReport psd_check(const CMatrix& m);

CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
RMatrix tensor_product(const RMatrix& a, const RMatrix& b);

// Von Neumann entropy -Tr(rho log rho) of a PSD operator; eigenvalues at or
// below zero contribute nothing.
double von_neumann_entropy(const CMatrix& rho);

}  // namespace kaoncp
