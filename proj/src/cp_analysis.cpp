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

#include "kaoncp/cp_analysis.hpp"

#include <cmath>
#include <sstream>

#include "kaoncp/bloch.hpp"
#include "kaoncp/error.hpp"
#include "kaoncp/two_kaon.hpp"

namespace kaoncp {

namespace {

constexpr double kKrausCutoff = 1e-12;

void require_single(const EvolutionMap& m, const char* what) {
  if (m.dim() != 4) {
    throw ShapeError(std::string(what) + ": expected a single-kaon 4x4 map");
  }
}

}  // namespace

CMatrix KrausSet::apply(const CMatrix& rho) const {
  CMatrix out = CMatrix::Zero(2, 2);
  for (const auto& v : ops) out += v * rho * v.adjoint();
  return out;
}

ChoiMatrix choi_of_map(const EvolutionMap& map) {
  require_single(map, "choi_of_map");
  CMatrix choi = CMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CMatrix unit = CMatrix::Zero(2, 2);
      unit(i, j) = 1.0;
      const CMatrix image = apply_bloch_map(map.bloch, unit);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) choi(2 * a + i, 2 * b + j) = image(a, b);
      }
    }
  }
  return {choi};
}

CpCheck is_completely_positive(const EvolutionMap& map) {
  const PsdReport r = psd_check(choi_of_map(map).matrix);
  return {r.is_psd, r.min_eigenvalue};
}

KrausSet kraus_from_choi(const ChoiMatrix& choi) {
  const CMatrix& c = choi.matrix;
  if (c.rows() != 4 || c.cols() != 4) {
    throw ShapeError("kraus_from_choi: expected a 4x4 Choi matrix");
  }
  const Spectrum s = hermitian_eigen(c);
  if (s.eigenvalues(0) < -psd_threshold(c)) {
    std::ostringstream os;
    os.precision(6);
    os << "kraus_from_choi: Choi matrix has negative eigenvalue "
       << s.eigenvalues(0) << "; the map admits no Kraus form";
    throw NotPositive(os.str(), s.eigenvalues(0));
  }
  const double cutoff = kKrausCutoff * std::abs(c.trace().real());

  KrausSet out;
  for (Eigen::Index k = 0; k < 4; ++k) {
    const double lambda = s.eigenvalues(k);
    if (lambda <= cutoff) continue;
    Eigen::Matrix2cd v;
    for (int a = 0; a < 2; ++a) {
      for (int i = 0; i < 2; ++i) v(a, i) = s.eigenvectors(2 * a + i, k);
    }
    out.ops.push_back(std::sqrt(lambda) * v);
  }

  // Tracing out the output factor leaves the transpose of Phi'(1).
  Eigen::Matrix2cd dual_unit = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int a = 0; a < 2; ++a) dual_unit(j, i) += c(2 * a + i, 2 * a + j);
    }
  }
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& v : out.ops) sum += v.adjoint() * v;
  out.completeness_defect = (sum - dual_unit).norm();
  return out;
}

ExtensionWitness extension_witness(const EvolutionMap& map) {
  require_single(map, "extension_witness");
  const CMatrix evolved =
      apply_two_kaon(extend_with_identity(map), singlet().matrix);
  const WitnessVectors w = witness_vectors();
  return {expectation(evolved, w.u), expectation(evolved, w.v),
          hermitian_eigen(evolved).eigenvalues(0)};
}

}  // namespace kaoncp
