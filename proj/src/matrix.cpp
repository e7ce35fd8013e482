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

#include "kaoncp/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kaoncp/error.hpp"

namespace kaoncp {

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("hermiticity_defect: matrix is not square");
  }
  return (m - m.adjoint()).norm();
}

void require_hermitian(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows()
       << "x" << m.cols();
    throw ShapeError(os.str());
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance * m.norm()) {
    std::ostringstream os;
    os.precision(3);
    os << what << " is not Hermitian: ||M - M^dagger||_F = " << defect
       << " (||M||_F = " << m.norm() << ")";
    throw NotHermitian(os.str(), defect);
  }
}

double psd_threshold(const CMatrix& m) {
  return kPsdTolerance * std::max(1.0, m.norm());
}

Spectrum hermitian_eigen(const CMatrix& m) {
  require_hermitian(m, "hermitian_eigen input");
  // Eigen's solver reads only the lower triangle; hand it the exact Hermitian
  // part so the sub-tolerance asymmetry does not bias one triangle.
  const CMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw DomainError("hermitian_eigen: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SignedDecomposition signed_decompose(const CMatrix& m) {
  const Spectrum s = hermitian_eigen(m);
  const double thr = psd_threshold(m);
  const auto n = m.rows();
  SignedDecomposition out{CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = s.eigenvalues(i);
    const CMatrix proj = s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint();
    if (lambda < -thr) {
      out.negative_part += lambda * proj;
    } else {
      out.positive_part += lambda * proj;
    }
  }
  return out;
}

double negative_mass(const CMatrix& m) {
  const Spectrum s = hermitian_eigen(m);
  const double thr = psd_threshold(m);
  double mass = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues(i) < -thr) mass -= s.eigenvalues(i);
  }
  return mass;
}

PsdReport psd_check(const CMatrix& m) {
  const Spectrum s = hermitian_eigen(m);
  const double min_ev = s.eigenvalues(0);
  return {min_ev >= -psd_threshold(m), min_ev};
}

namespace {

template <typename Mat>
Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) { return kron(a, b); }
RMatrix tensor_product(const RMatrix& a, const RMatrix& b) { return kron(a, b); }

double von_neumann_entropy(const CMatrix& rho) {
  const Spectrum s = hermitian_eigen(rho);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double p = s.eigenvalues(i);
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

}  // namespace kaoncp
