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

#include <cmath>
#include <cstring>
#include <vector>

#include "kaoncp/kaoncp.h"

namespace {

struct HamiltonianGuard {
  kcp_hamiltonian* h = nullptr;
  ~HamiltonianGuard() { kcp_hamiltonian_destroy(h); }
};

struct MapGuard {
  kcp_map* m = nullptr;
  ~MapGuard() { kcp_map_destroy(m); }
};

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::strlen(kcp_version()) > 0);
  CHECK(std::strcmp(kcp_status_string(KCP_OK), "ok") == 0);
  CHECK(std::strlen(kcp_status_string(KCP_ERR_DOMAIN)) > 0);
  CHECK(std::strlen(kcp_status_string(static_cast<kcp_status>(99))) > 0);
}

TEST_CASE("null pointers are reported") {
  CHECK(kcp_params_validate(nullptr) == KCP_ERR_NULL_POINTER);
  CHECK(std::strstr(kcp_last_error(), "NULL") != nullptr);
  kcp_params p{};
  CHECK(kcp_cp_inequalities(&p, nullptr) == KCP_ERR_NULL_POINTER);
  CHECK(kcp_map_evolve(nullptr, &p, 1.0, nullptr) == KCP_ERR_NULL_POINTER);
  kcp_hamiltonian_destroy(nullptr);
  kcp_map_destroy(nullptr);
}

TEST_CASE("domain errors carry a message") {
  kcp_params p{-1.0, 0, 0, 1.0, 0, 1.0};
  CHECK(kcp_params_validate(&p) == KCP_ERR_DOMAIN);
  CHECK(std::strlen(kcp_last_error()) > 0);
  MapGuard m;
  CHECK(kcp_map_tau(1.0, 2.0, 1.0, 0.5, &m.m) == KCP_ERR_DOMAIN);
  CHECK(m.m == nullptr);
}

TEST_CASE("inequalities") {
  const kcp_params p{1, 0.45, 0.45, 1, 0.45, 1};
  kcp_inequality_report r{};
  REQUIRE(kcp_cp_inequalities(&p, &r) == KCP_OK);
  CHECK(r.all_passed == 1);
  CHECK(std::strcmp(kcp_inequality_name(0), "a <= alpha + gamma") == 0);
  CHECK(std::strlen(kcp_inequality_name(6)) == 0);
  int pos = -1;
  REQUIRE(kcp_positive_semigroup(&p, &pos) == KCP_OK);
  CHECK(pos == 1);
}

TEST_CASE("tau coefficients and maps") {
  kcp_tau_values v{};
  REQUIRE(kcp_tau_coefficients(2.0, 1.0, 3.0, 0.1, &v) == KCP_OK);
  CHECK(v.A == doctest::Approx(0.6829169851756041).epsilon(1e-14));
  CHECK(v.B == doctest::Approx(-0.12231954659713809).epsilon(1e-14));
  CHECK(v.C == doctest::Approx(0.5605974385784658).epsilon(1e-14));

  MapGuard tau;
  REQUIRE(kcp_map_tau(2.0, 1.0, 3.0, 0.1, &tau.m) == KCP_OK);
  CHECK(kcp_map_dim(tau.m) == 4);
  CHECK(kcp_map_time(tau.m) == 0.1);
  CHECK(kcp_map_provenance(tau.m) == KCP_PROVENANCE_CLOSED_FORM);
  double f[16];
  CHECK(kcp_map_matrix(tau.m, f, 15) == KCP_ERR_SHAPE);
  REQUIRE(kcp_map_matrix(tau.m, f, 16) == KCP_OK);
  CHECK(f[0] == 1.0);
  CHECK(f[2 * 4 + 2] == doctest::Approx(v.A));
  CHECK(f[2 * 4 + 3] == doctest::Approx(v.B));
  CHECK(f[3 * 4 + 3] == doctest::Approx(v.C));

  // Same map through the generic exponential.
  kcp_params p{0, 0, 0, 2.0, 1.0, 3.0};
  double g[16];
  REQUIRE(kcp_dissipator_matrix(&p, g) == KCP_OK);
  MapGuard ex;
  REQUIRE(kcp_map_expm(g, 4, 0.1, &ex.m) == KCP_OK);
  double e[16];
  REQUIRE(kcp_map_matrix(ex.m, e, 16) == KCP_OK);
  for (int i = 0; i < 16; ++i) CHECK(std::abs(e[i] - f[i]) < 1e-13);
  CHECK(kcp_map_expm(g, 3, 0.1, &ex.m) == KCP_ERR_SHAPE);

  MapGuard prod;
  REQUIRE(kcp_map_product(tau.m, &prod.m) == KCP_OK);
  CHECK(kcp_map_dim(prod.m) == 16);
  CHECK(kcp_map_provenance(prod.m) == KCP_PROVENANCE_PRODUCT);
  MapGuard twice;
  CHECK(kcp_map_product(prod.m, &twice.m) == KCP_ERR_SHAPE);
}

TEST_CASE("hamiltonian handles") {
  HamiltonianGuard h;
  REQUIRE(kcp_hamiltonian_from_widths(0.0, 0.47, 1.0, 0.002, &h.h) == KCP_OK);
  double lambda = 0;
  REQUIRE(kcp_hamiltonian_lambda_max(h.h, &lambda) == KCP_OK);
  CHECK(lambda == doctest::Approx(1.0));
  int psd = 0;
  REQUIRE(kcp_hamiltonian_width_is_psd(h.h, &psd) == KCP_OK);
  CHECK(psd == 1);

  HamiltonianGuard bad;
  const kcp_complex nan_matrix[4] = {{NAN, 0}, {0, 0}, {0, 0}, {0, 0}};
  CHECK(kcp_hamiltonian_from_matrix(nan_matrix, &bad.h) != KCP_OK);
  CHECK(bad.h == nullptr);

  // Pure decay: K1 survives with exp(-t).
  const kcp_params none{};
  MapGuard m;
  REQUIRE(kcp_map_evolve(h.h, &none, 2.0, &m.m) == KCP_OK);
  const double k1[4] = {0.5, 0.0, 0.0, 0.5};
  double out[4];
  REQUIRE(kcp_map_apply(m.m, k1, out, 4) == KCP_OK);
  CHECK(2.0 * out[0] == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

  kcp_cp_check cp{};
  REQUIRE(kcp_map_cp_check(m.m, &cp) == KCP_OK);
  CHECK(cp.completely_positive == 1);

  kcp_complex ops[4 * 4];
  size_t count = 0;
  double defect = -1;
  REQUIRE(kcp_kraus_from_map(m.m, ops, 4, &count, &defect) == KCP_OK);
  CHECK(count == 1);
  // Capacity 0 only queries the count.
  count = 0;
  CHECK(kcp_kraus_from_map(m.m, nullptr, 0, &count, nullptr) == KCP_OK);
  CHECK(count == 1);

  MapGuard tr;
  REQUIRE(kcp_map_trotter(h.h, &none, 2.0, 8, &tr.m) == KCP_OK);
  CHECK(kcp_map_trotter_steps(tr.m) == 8);
  CHECK(kcp_map_provenance(tr.m) == KCP_PROVENANCE_TROTTER);
}

TEST_CASE("non-CP map through the C API") {
  MapGuard m;
  REQUIRE(kcp_map_tau(1.0, 0.0, 2.0, 0.3, &m.m) == KCP_OK);
  kcp_cp_check cp{};
  REQUIRE(kcp_map_cp_check(m.m, &cp) == KCP_OK);
  CHECK(cp.completely_positive == 0);
  CHECK(cp.min_choi_eigenvalue < 0);
  kcp_complex ops[16];
  size_t count = 0;
  double defect = 0;
  CHECK(kcp_kraus_from_map(m.m, ops, 4, &count, &defect) == KCP_ERR_NOT_POSITIVE);
  kcp_extension_witness_values w{};
  REQUIRE(kcp_extension_witness(m.m, &w) == KCP_OK);
  CHECK(w.min_eigenvalue < 0);
  CHECK(w.value_u == doctest::Approx(0.5 * (std::exp(-0.6) - std::exp(-1.2))));
}

TEST_CASE("two-kaon entry points") {
  double s[16];
  REQUIRE(kcp_singlet_components(s) == KCP_OK);
  CHECK(s[0] == doctest::Approx(0.25));
  CHECK(s[5] == doctest::Approx(-0.25));
  double min_eig = 0, neg = 1;
  REQUIRE(kcp_state_spectrum(s, 16, &min_eig, &neg) == KCP_OK);
  CHECK(std::abs(min_eig) < 1e-15);
  CHECK(neg == 0.0);
  CHECK(kcp_state_spectrum(s, 5, &min_eig, nullptr) == KCP_ERR_SHAPE);

  kcp_two_kaon_witness_values w{};
  REQUIRE(kcp_two_kaon_witness(2.0, 1.0, 3.0, 0.1, &w) == KCP_OK);
  CHECK(w.closed_form == doctest::Approx(0.07605306025029976).epsilon(1e-13));
  CHECK(std::abs(w.value_u - w.closed_form) < 1e-12);

  HamiltonianGuard h;
  REQUIRE(kcp_hamiltonian_from_widths(0.0, 0.47, 1.0, 0.002, &h.h) == KCP_OK);
  kcp_bound_report b{};
  REQUIRE(kcp_trotter_bound(h.h, 0.7, 0.0, 0.7, 1.0, 16, &b) == KCP_OK);
  CHECK(b.degenerate == 1);
  CHECK(b.holds == 1);
  CHECK(kcp_trotter_bound(h.h, 0.7, 0.0, 0.7, 1.0, 0, &b) == KCP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("observables through the C API") {
  HamiltonianGuard h;
  REQUIRE(kcp_hamiltonian_from_widths(0.0, 0.47, 1.0, 0.002, &h.h) == KCP_OK);
  const kcp_params none{};
  const double k1[4] = {0.5, 0.0, 0.0, 0.5};
  const kcp_complex p1[4] = {{1, 0}, {0, 0}, {0, 0}, {0, 0}};
  const kcp_complex p2[4] = {{0, 0}, {0, 0}, {0, 0}, {1, 0}};
  const double times[3] = {0.0, 1.0, 2.0};
  double values[3];
  REQUIRE(kcp_decay_rate(h.h, &none, k1, p1, times, 3, values) == KCP_OK);
  CHECK(values[0] == 1.0);
  CHECK(values[2] == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(kcp_decay_rate(h.h, &none, k1, p2, times, 3, values) == KCP_ERR_DOMAIN);

  size_t produced = 0;
  REQUIRE(kcp_asymmetry(h.h, &none, p1, p1, times, 3, values, &produced) == KCP_OK);
  CHECK(produced == 3);
  for (double v : values) CHECK(std::abs(v) < 1e-12);
}
