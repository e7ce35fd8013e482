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
#include "kaoncp/cp_analysis.hpp"
#include "kaoncp/error.hpp"
#include "kaoncp/evolution.hpp"
#include "kaoncp/generators.hpp"
#include "kaoncp/two_kaon.hpp"
#include "test_support.hpp"

using namespace kaoncp;
using kaoncp::testing::Rng;

namespace {

EvolutionMap transpose_map() {
  // rho^T flips the sign of the sigma_2 component only.
  return {RMatrix(Eigen::Vector4d(1, 1, -1, 1).asDiagonal()), 0.0,
          Provenance::Identity, 0};
}

EvolutionMap unitary_like(const Eigen::Matrix2cd& v) {
  const RMatrix f = superop_to_bloch([&](const CMatrix& rho) -> CMatrix {
    return v * rho * v.adjoint();
  });
  return {f, 0.0, Provenance::Exponential, 0};
}

}  // namespace

TEST_CASE("choi_of_map examples") {
  SUBCASE("identity map gives the rank-one reference projector") {
    const ChoiMatrix c = choi_of_map(EvolutionMap::identity(4));
    Eigen::Vector4cd omega(1, 0, 0, 1);
    CHECK((c.matrix - omega * omega.adjoint()).norm() == 0.0);
    CHECK(c.matrix.trace().real() == 2.0);
  }
  SUBCASE("transpose map gives the swap operator") {
    const ChoiMatrix c = choi_of_map(transpose_map());
    CMatrix swap = CMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) swap(2 * i + j, 2 * j + i) = 1.0;
    }
    CHECK((c.matrix - swap).norm() < 1e-15);
    CHECK(psd_check(c.matrix).min_eigenvalue == doctest::Approx(-1.0));
  }
  SUBCASE("agrees with a direct superoperator construction") {
    Rng rng(3);
    const Eigen::Matrix2cd v = testing::random_complex(rng, 2);
    const CMatrix direct = testing::oracle_choi([&](const CMatrix& rho) -> CMatrix {
      return v * rho * v.adjoint();
    });
    CHECK((choi_of_map(unitary_like(v)).matrix - direct).norm() < 1e-13 * direct.norm());
  }
  SUBCASE("CP closed form stays PSD for all t") {
    for (double t : {0.0, 0.01, 0.5, 2.0, 10.0}) {
      REQUIRE(is_completely_positive(tau_closed_form(0.8, 0.0, 0.8, t)).completely_positive);
    }
  }
  CHECK_THROWS_AS(choi_of_map(EvolutionMap::identity(16)), ShapeError);
}

TEST_CASE("is_completely_positive examples") {
  SUBCASE("standard Weisskopf-Wigner evolution is CP") {
    const auto h = EffectiveHamiltonian::from_kaon_widths(0.0, 0.47, 1.0, 0.002);
    for (double t : {0.1, 1.0, 5.0}) {
      const CpCheck c = is_completely_positive(
          expm_evolution(weisskopf_wigner_generator(h), t));
      REQUIRE(c.completely_positive);
      REQUIRE(c.min_choi_eigenvalue > -1e-12);
    }
  }
  SUBCASE("closed form with alpha != gamma is not CP for t > 0") {
    for (double t : {0.01, 0.3, 2.0}) {
      const CpCheck c = is_completely_positive(tau_closed_form(1.0, 0.0, 2.0, t));
      REQUIRE_FALSE(c.completely_positive);
      REQUIRE(c.min_choi_eigenvalue < 0.0);
    }
  }
  SUBCASE("identity is CP") {
    const CpCheck c = is_completely_positive(EvolutionMap::identity(4));
    CHECK(c.completely_positive);
    CHECK(c.min_choi_eigenvalue == doctest::Approx(0.0));
  }
}

TEST_CASE("kraus_from_choi examples") {
  SUBCASE("identity map has a single identity Kraus operator") {
    const KrausSet k = kraus_from_choi(choi_of_map(EvolutionMap::identity(4)));
    REQUIRE(k.ops.size() == 1);
    // Fixed only up to a global phase.
    const Complex phase = k.ops[0](0, 0);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-14);
    CHECK((k.ops[0] / phase - Eigen::Matrix2cd::Identity()).norm() < 1e-14);
    CHECK(k.completeness_defect < 1e-14);
  }
  SUBCASE("isotropic depolarizer has four Kraus operators") {
    const double g = 0.5;
    const EvolutionMap m = expm_evolution(dissipator_matrix({g, 0, 0, g, 0, g}), 1.0);
    const ChoiMatrix c = choi_of_map(m);
    // Choi eigenvalues (1 + 3e)/2 and (1 - e)/2 with e = exp(-2 g t).
    const Spectrum s = hermitian_eigen(c.matrix);
    CHECK(s.eigenvalues(0) == doctest::Approx(0.31606027941427883).epsilon(1e-12));
    CHECK(s.eigenvalues(3) == doctest::Approx(1.0518191617571635).epsilon(1e-12));
    const KrausSet k = kraus_from_choi(c);
    CHECK(k.ops.size() == 4);
    CHECK(k.completeness_defect < 1e-12);
    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
      const CMatrix rho = testing::random_hermitian(rng, 2);
      REQUIRE((k.apply(rho) - apply_bloch_map(m.bloch, rho)).norm() < 1e-10);
    }
  }
  SUBCASE("non-CP closed form is rejected with its negative eigenvalue") {
    const ChoiMatrix c = choi_of_map(tau_closed_form(1.0, 0.0, 2.0, 0.5));
    CHECK_THROWS_AS(kraus_from_choi(c), NotPositive);
    try {
      kraus_from_choi(c);
    } catch (const NotPositive& e) {
      CHECK(e.min_eigenvalue() < 0.0);
    }
  }
}

TEST_CASE("Kraus extraction reconstructs random CP maps") {
  Rng rng(61);
  for (int k = 0; k < 200; ++k) {
    // Random CP semigroup: Lindblad generator plus a random Hamiltonian part.
    LindbladOperators l;
    for (int j = 0; j < 2; ++j) l.ops.push_back(testing::random_complex(rng, 2, 0.5));
    const auto h = EffectiveHamiltonian::from_matrix(testing::random_complex(rng, 2, 0.5));
    const RMatrix gen = RMatrix(lindblad_dissipator(l)) + RMatrix(weisskopf_wigner_generator(h));
    const EvolutionMap m = expm_evolution(gen, testing::uniform(rng, 0.05, 2.0));
    const KrausSet ks = kraus_from_choi(choi_of_map(m));
    REQUIRE(ks.completeness_defect < 1e-10);
    for (int mu = 0; mu < 4; ++mu) {
      const CMatrix img = ks.apply(CMatrix(pauli(mu)));
      REQUIRE((img - apply_bloch_map(m.bloch, CMatrix(pauli(mu)))).norm() < 1e-10);
    }
  }
}

TEST_CASE("extension_witness examples") {
  SUBCASE("identity map") {
    const ExtensionWitness w = extension_witness(EvolutionMap::identity(4));
    CHECK(std::abs(w.value_u) < 1e-15);
    CHECK(std::abs(w.value_v) < 1e-15);
    CHECK(w.min_eigenvalue > -1e-15);
  }
  SUBCASE("closed form with alpha < gamma: positive u value (A - C)/2") {
    const TauClosedForm tau(1.0, 0.3, 2.0);
    for (double t : {0.05, 0.5, 3.0}) {
      const ExtensionWitness w = extension_witness(tau_closed_form(1.0, 0.3, 2.0, t));
      const double expected = 0.5 * (tau.A(t) - tau.C(t));
      REQUIRE(expected > 0.0);
      REQUIRE(std::abs(w.value_u - expected) < 1e-12);
      REQUIRE(std::abs(w.value_u + w.value_v) < 1e-12);
      REQUIRE(w.min_eigenvalue < 0.0);
    }
  }
  SUBCASE("closed form with alpha > gamma: sign flips") {
    const ExtensionWitness w = extension_witness(tau_closed_form(2.0, 0.3, 1.0, 0.5));
    CHECK(w.value_u < 0.0);
    CHECK(w.value_v > 0.0);
  }
}

TEST_CASE("probe negativity coincides with loss of complete positivity") {
  Rng rng(67);
  for (int k = 0; k < 500; ++k) {
    const DissipativeParams p = testing::random_simply_positive(rng, 2.0);
    const double t = testing::uniform(rng, 0.01, 3.0);
    const EvolutionMap m = tau_closed_form(p.alpha, p.beta, p.gamma, t);
    const ExtensionWitness w = extension_witness(m);
    const CpCheck c = is_completely_positive(m);
    // The probe state is a local rotation of Choi / 2: same spectrum up to 1/2.
    if (std::abs(c.min_choi_eigenvalue) < 1e-8) continue;
    REQUIRE((w.min_eigenvalue < -kPsdTolerance) == !c.completely_positive);
    REQUIRE(w.min_eigenvalue == doctest::Approx(0.5 * c.min_choi_eigenvalue).epsilon(1e-9));
    REQUIRE(std::abs(w.value_u + w.value_v) < 1e-12);
  }
}
