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

#include <doctest.h>

#include "kaoncp/bloch.hpp"
#include "kaoncp/error.hpp"
#include "kaoncp/generators.hpp"
#include "test_support.hpp"

using namespace kaoncp;
using kaoncp::testing::Rng;

TEST_CASE("Pauli basis orthogonality and product rule") {
  const Complex i(0.0, 1.0);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Complex tr = (pauli(mu) * pauli(nu)).trace();
      CHECK(std::abs(tr - (mu == nu ? 2.0 : 0.0)) == 0.0);
    }
  }
  // sigma_1 sigma_2 = i sigma_3 and cyclic.
  CHECK((pauli(1) * pauli(2) - i * pauli(3)).norm() == 0.0);
  CHECK((pauli(2) * pauli(3) - i * pauli(1)).norm() == 0.0);
  CHECK((pauli(3) * pauli(1) - i * pauli(2)).norm() == 0.0);
  CHECK((pauli(2) * pauli(2) - pauli(0)).norm() == 0.0);
  CHECK_THROWS_AS(pauli(4), InvalidArgument);
}

TEST_CASE("kaon basis vectors") {
  using namespace kaon_basis;
  CHECK(k1().norm() == doctest::Approx(1.0));
  CHECK(kbar().norm() == doctest::Approx(1.0));
  CHECK(std::abs(k1().dot(k2())) == 0.0);
  // Inverse of the CP-eigenstate definition.
  CHECK(((k() + kbar()) / std::sqrt(2.0) - k1()).norm() < 1e-15);
  CHECK(((k() - kbar()) / std::sqrt(2.0) - k2()).norm() < 1e-15);
}

TEST_CASE("matrix_to_bloch examples") {
  const BlochVector mixed = matrix_to_bloch(0.5 * CMatrix::Identity(2, 2));
  CHECK((mixed.components - Eigen::Vector4d(0.5, 0, 0, 0)).norm() == 0.0);

  const BlochVector k1 = matrix_to_bloch(kaon_basis::projector(kaon_basis::k1()));
  CHECK((k1.components - Eigen::Vector4d(0.5, 0, 0, 0.5)).norm() == 0.0);

  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(matrix_to_bloch(bad), NotHermitian);
}

TEST_CASE("bloch_to_matrix examples") {
  BlochVector v;
  v.components << 0.5, 0, 0, 0;
  CHECK((bloch_to_matrix(v) - 0.5 * CMatrix::Identity(2, 2)).norm() == 0.0);
  v.components << 0.5, 0, 0, 0.5;
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK((bloch_to_matrix(v) - expected).norm() == 0.0);
  CHECK(v.trace() == 1.0);
}

TEST_CASE("Bloch round trips") {
  Rng rng(17);
  for (int k = 0; k < 1000; ++k) {
    const CMatrix h = testing::random_hermitian(rng, 2);
    REQUIRE((bloch_to_matrix(matrix_to_bloch(h)) - h).norm() < 1e-14 * std::max(1.0, h.norm()));
    BlochVector v;
    v.components = Eigen::Vector4d::Random();
    REQUIRE((matrix_to_bloch(bloch_to_matrix(v)).components - v.components).norm() < 1e-14);
  }
}

TEST_CASE("positivity of a normalized state matches the Bloch-ball test") {
  Rng rng(23);
  for (int k = 0; k < 1000; ++k) {
    BlochVector v;
    v.components(0) = 0.5;
    for (int i = 1; i < 4; ++i) v.components(i) = testing::uniform(rng, -0.6, 0.6);
    const double r = v.spatial_norm();
    if (std::abs(r - 0.5) < 1e-9) continue;
    REQUIRE(psd_check(bloch_to_matrix(v)).is_psd == (r <= 0.5));
  }
}

TEST_CASE("superop_to_bloch examples") {
  SUBCASE("identity map") {
    const RMatrix f = superop_to_bloch([](const CMatrix& rho) { return rho; });
    CHECK((f - RMatrix::Identity(4, 4)).norm() == 0.0);
  }
  SUBCASE("conjugation by sigma_1 flips rho^2 and rho^3") {
    const RMatrix f = superop_to_bloch([](const CMatrix& rho) -> CMatrix {
      return pauli(1) * rho * pauli(1);
    });
    const Eigen::Vector4d d(1, 1, -1, -1);
    CHECK((f - RMatrix(d.asDiagonal())).norm() == 0.0);
  }
  SUBCASE("map reproduces itself on random states") {
    Rng rng(4);
    const CMatrix v = testing::random_complex(rng, 2);
    const SuperOperator map = [&](const CMatrix& rho) -> CMatrix {
      return v * rho * v.adjoint() + 0.3 * rho.trace() * CMatrix::Identity(2, 2);
    };
    const RMatrix f = superop_to_bloch(map);
    for (int k = 0; k < 50; ++k) {
      const CMatrix rho = testing::random_hermitian(rng, 2);
      BlochVector out;
      out.components = f * matrix_to_bloch(rho).components;
      REQUIRE((bloch_to_matrix(out) - map(rho)).norm() < 1e-13 * (1 + map(rho).norm()));
    }
  }
  SUBCASE("non-Hermiticity-preserving map is rejected") {
    const SuperOperator map = [](const CMatrix& rho) -> CMatrix {
      return pauli(1) * rho;
    };
    CHECK_THROWS_AS(superop_to_bloch(map), NotHermitian);
  }
}

TEST_CASE("two-body Bloch coefficients round trip") {
  Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const CMatrix h = testing::random_hermitian(rng, 4);
    REQUIRE((two_body_from_bloch(two_body_to_bloch(h)) - h).norm() < 1e-14 * (1 + h.norm()));
    const Eigen::Matrix4d r = two_body_to_bloch(h);
    REQUIRE((unflatten(flatten(r)) - r).norm() == 0.0);
  }
}
