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

#include "kaoncp/kaoncp.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>

#include "kaoncp/bloch.hpp"
#include "kaoncp/cp_analysis.hpp"
#include "kaoncp/error.hpp"
#include "kaoncp/evolution.hpp"
#include "kaoncp/generators.hpp"
#include "kaoncp/observables.hpp"
#include "kaoncp/two_kaon.hpp"

struct kcp_hamiltonian {
  kaoncp::EffectiveHamiltonian h;
};

struct kcp_map {
  kaoncp::EvolutionMap map;
};

namespace {

using namespace kaoncp;

thread_local std::string g_last_error;

kcp_status fail(kcp_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
kcp_status guarded(F&& body) {
  try {
    body();
    return KCP_OK;
  } catch (const kaoncp::Error& e) {
    return fail(static_cast<kcp_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KCP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KCP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KCP_ERR_INTERNAL, "unknown error");
  }
}

#define KCP_REQUIRE(ptr)                                                 \
  do {                                                                   \
    if ((ptr) == nullptr) return fail(KCP_ERR_NULL_POINTER, #ptr " is NULL"); \
  } while (0)

DissipativeParams to_params(const kcp_params& p) {
  return {p.a, p.b, p.c, p.alpha, p.beta, p.gamma};
}

CMatrix to_matrix2(const kcp_complex m[4]) {
  CMatrix out(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = Complex(m[2 * i + j].re, m[2 * i + j].im);
  }
  return out;
}

void write_real(const RMatrix& m, double* out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
  }
}

void write_complex(const CMatrix& m, kcp_complex* out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[i * m.cols() + j] = {m(i, j).real(), m(i, j).imag()};
    }
  }
}

CMatrix state_from_components(const double* components, size_t len) {
  if (len == 4) {
    BlochVector v;
    for (int i = 0; i < 4; ++i) v.components(i) = components[i];
    return bloch_to_matrix(v);
  }
  if (len == 16) {
    Eigen::VectorXd flat(16);
    for (int i = 0; i < 16; ++i) flat(i) = components[i];
    return two_body_from_bloch(unflatten(flat));
  }
  throw ShapeError("state components must number 4 or 16");
}

}  // namespace

extern "C" {

const char* kcp_version(void) { return "0.1.0"; }

const char* kcp_last_error(void) { return g_last_error.c_str(); }

const char* kcp_status_string(kcp_status status) {
  switch (status) {
    case KCP_OK: return "ok";
    case KCP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KCP_ERR_NOT_HERMITIAN: return "not Hermitian";
    case KCP_ERR_NOT_POSITIVE: return "not positive";
    case KCP_ERR_DOMAIN: return "domain error";
    case KCP_ERR_SHAPE: return "shape mismatch";
    case KCP_ERR_NULL_POINTER: return "null pointer";
    case KCP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

kcp_status kcp_hamiltonian_from_matrix(const kcp_complex h[4],
                                       kcp_hamiltonian** out) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(out);
  return guarded([&] {
    *out = new kcp_hamiltonian{EffectiveHamiltonian::from_matrix(to_matrix2(h))};
  });
}

kcp_status kcp_hamiltonian_from_widths(double m_short, double m_long,
                                       double width_short, double width_long,
                                       kcp_hamiltonian** out) {
  KCP_REQUIRE(out);
  return guarded([&] {
    *out = new kcp_hamiltonian{EffectiveHamiltonian::from_kaon_widths(
        m_short, m_long, width_short, width_long)};
  });
}

void kcp_hamiltonian_destroy(kcp_hamiltonian* h) { delete h; }

kcp_status kcp_hamiltonian_lambda_max(const kcp_hamiltonian* h, double* out) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(out);
  return guarded([&] { *out = h->h.lambda_max(); });
}

kcp_status kcp_hamiltonian_width_is_psd(const kcp_hamiltonian* h, int* out) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(out);
  return guarded([&] { *out = h->h.width_is_psd() ? 1 : 0; });
}

kcp_status kcp_params_validate(const kcp_params* p) {
  KCP_REQUIRE(p);
  return guarded([&] { to_params(*p).validate(); });
}

const char* kcp_inequality_name(int index) {
  static const CpInequalityReport names = cp_inequalities(DissipativeParams{});
  if (index < 0 || index >= KCP_NUM_INEQUALITIES) return "";
  return names.items[static_cast<std::size_t>(index)].name.c_str();
}

kcp_status kcp_cp_inequalities(const kcp_params* p, kcp_inequality_report* out) {
  KCP_REQUIRE(p);
  KCP_REQUIRE(out);
  return guarded([&] {
    const CpInequalityReport r = cp_inequalities(to_params(*p));
    for (int i = 0; i < KCP_NUM_INEQUALITIES; ++i) {
      out->margin[i] = r.items[static_cast<std::size_t>(i)].margin;
      out->passed[i] = r.items[static_cast<std::size_t>(i)].passed ? 1 : 0;
    }
    out->all_passed = r.all_passed() ? 1 : 0;
    out->min_margin = r.min_margin();
  });
}

kcp_status kcp_positive_semigroup(const kcp_params* p, int* out) {
  KCP_REQUIRE(p);
  KCP_REQUIRE(out);
  return guarded([&] { *out = generates_positive_semigroup(to_params(*p)) ? 1 : 0; });
}

kcp_status kcp_dissipator_matrix(const kcp_params* p, double out[16]) {
  KCP_REQUIRE(p);
  KCP_REQUIRE(out);
  return guarded([&] { write_real(dissipator_matrix(to_params(*p)), out); });
}

kcp_status kcp_lindblad_dissipator(const kcp_complex* ops, size_t count,
                                   double out[16]) {
  if (count > 0) KCP_REQUIRE(ops);
  KCP_REQUIRE(out);
  return guarded([&] {
    LindbladOperators l;
    for (size_t k = 0; k < count; ++k) l.ops.emplace_back(to_matrix2(ops + 4 * k));
    write_real(lindblad_dissipator(l), out);
  });
}

kcp_status kcp_full_generator(const kcp_hamiltonian* h, const kcp_params* p,
                              double out[16]) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(p);
  KCP_REQUIRE(out);
  return guarded([&] { write_real(full_generator(h->h, to_params(*p)), out); });
}

kcp_status kcp_tau_coefficients(double alpha, double beta, double gamma,
                                double t, kcp_tau_values* out) {
  KCP_REQUIRE(out);
  return guarded([&] {
    if (!(t >= 0.0)) throw DomainError("kcp_tau_coefficients: t must be >= 0");
    const TauClosedForm tau(alpha, beta, gamma);
    *out = {tau.lambda_plus(), tau.lambda_minus(), tau.A(t), tau.B(t), tau.C(t),
            tau.degenerate() ? 1 : 0};
  });
}

kcp_status kcp_map_tau(double alpha, double beta, double gamma, double t,
                       kcp_map** out) {
  KCP_REQUIRE(out);
  return guarded([&] { *out = new kcp_map{tau_closed_form(alpha, beta, gamma, t)}; });
}

kcp_status kcp_map_expm(const double* generator, size_t dim, double t,
                        kcp_map** out) {
  KCP_REQUIRE(generator);
  KCP_REQUIRE(out);
  return guarded([&] {
    if (dim != 4 && dim != 16) throw ShapeError("kcp_map_expm: dim must be 4 or 16");
    RMatrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; ++i) {
      for (size_t j = 0; j < dim; ++j) {
        g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            generator[i * dim + j];
      }
    }
    *out = new kcp_map{expm_evolution(g, t)};
  });
}

kcp_status kcp_map_evolve(const kcp_hamiltonian* h, const kcp_params* p,
                          double t, kcp_map** out) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(p);
  KCP_REQUIRE(out);
  return guarded([&] {
    *out = new kcp_map{expm_evolution(full_generator(h->h, to_params(*p)), t)};
  });
}

kcp_status kcp_map_trotter(const kcp_hamiltonian* h, const kcp_params* p,
                           double t, int n, kcp_map** out) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(p);
  KCP_REQUIRE(out);
  return guarded([&] {
    const RMatrix ww = weisskopf_wigner_generator(h->h);
    const RMatrix diss = dissipator_matrix(to_params(*p));
    *out = new kcp_map{trotter_compose(
        [&](double s) { return expm_evolution(ww, s); },
        [&](double s) { return expm_evolution(diss, s); }, t, n)};
  });
}

kcp_status kcp_map_product(const kcp_map* single, kcp_map** out) {
  KCP_REQUIRE(single);
  KCP_REQUIRE(out);
  return guarded([&] { *out = new kcp_map{product_evolution(single->map)}; });
}

void kcp_map_destroy(kcp_map* map) { delete map; }

size_t kcp_map_dim(const kcp_map* map) {
  return map ? static_cast<size_t>(map->map.dim()) : 0;
}

double kcp_map_time(const kcp_map* map) { return map ? map->map.time : 0.0; }

kcp_provenance kcp_map_provenance(const kcp_map* map) {
  return map ? static_cast<kcp_provenance>(map->map.provenance)
             : KCP_PROVENANCE_IDENTITY;
}

int kcp_map_trotter_steps(const kcp_map* map) {
  return map ? map->map.trotter_steps : 0;
}

kcp_status kcp_map_matrix(const kcp_map* map, double* out, size_t len) {
  KCP_REQUIRE(map);
  KCP_REQUIRE(out);
  const auto dim = static_cast<size_t>(map->map.dim());
  if (len != dim * dim) {
    return fail(KCP_ERR_SHAPE, "kcp_map_matrix: buffer length must be dim*dim");
  }
  write_real(map->map.bloch, out);
  return KCP_OK;
}

kcp_status kcp_map_apply(const kcp_map* map, const double* in, double* out,
                         size_t len) {
  KCP_REQUIRE(map);
  KCP_REQUIRE(in);
  KCP_REQUIRE(out);
  return guarded([&] {
    if (len != static_cast<size_t>(map->map.dim())) {
      throw ShapeError("kcp_map_apply: buffer length must equal map dimension");
    }
    const RVector v = Eigen::Map<const RVector>(in, static_cast<Eigen::Index>(len));
    const RVector r = map->map.apply(v);
    std::copy(r.data(), r.data() + r.size(), out);
  });
}

kcp_status kcp_choi_matrix(const kcp_map* map, kcp_complex out[16]) {
  KCP_REQUIRE(map);
  KCP_REQUIRE(out);
  return guarded([&] { write_complex(choi_of_map(map->map).matrix, out); });
}

kcp_status kcp_map_cp_check(const kcp_map* map, kcp_cp_check* out) {
  KCP_REQUIRE(map);
  KCP_REQUIRE(out);
  return guarded([&] {
    const CpCheck c = is_completely_positive(map->map);
    *out = {c.completely_positive ? 1 : 0, c.min_choi_eigenvalue};
  });
}

kcp_status kcp_kraus_from_map(const kcp_map* map, kcp_complex* ops,
                              size_t capacity, size_t* count,
                              double* completeness_defect) {
  KCP_REQUIRE(map);
  KCP_REQUIRE(count);
  if (capacity > 0) KCP_REQUIRE(ops);
  return guarded([&] {
    const KrausSet k = kraus_from_choi(choi_of_map(map->map));
    *count = k.ops.size();
    if (completeness_defect) *completeness_defect = k.completeness_defect;
    const size_t n = std::min(capacity, k.ops.size());
    for (size_t i = 0; i < n; ++i) write_complex(k.ops[i], ops + 4 * i);
  });
}

kcp_status kcp_extension_witness(const kcp_map* map, kcp_extension_witness_values* out) {
  KCP_REQUIRE(map);
  KCP_REQUIRE(out);
  return guarded([&] {
    const ExtensionWitness w = extension_witness(map->map);
    *out = {w.value_u, w.value_v, w.min_eigenvalue};
  });
}

kcp_status kcp_singlet_components(double out[16]) {
  KCP_REQUIRE(out);
  return guarded([&] {
    const Eigen::VectorXd flat = flatten(two_body_to_bloch(singlet().matrix));
    std::copy(flat.data(), flat.data() + 16, out);
  });
}

kcp_status kcp_two_kaon_witness(double alpha, double beta, double gamma,
                                double t, kcp_two_kaon_witness_values* out) {
  KCP_REQUIRE(out);
  return guarded([&] {
    const TwoKaonWitness w = two_kaon_witness(alpha, beta, gamma, t);
    *out = {w.value_u, w.value_v, w.closed_form};
  });
}

kcp_status kcp_trotter_bound(const kcp_hamiltonian* h, double alpha,
                             double beta, double gamma, double t, int n,
                             kcp_bound_report* out) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(out);
  return guarded([&] {
    const NegativeMassBound b =
        trotter_negative_mass_bound(h->h, alpha, beta, gamma, t, n);
    *out = {b.lhs, b.rhs, b.rho_minus_trace, b.min_eigenvalue, b.trace,
            b.holds ? 1 : 0, b.degenerate ? 1 : 0};
  });
}

kcp_status kcp_state_spectrum(const double* components, size_t len,
                              double* min_eigenvalue, double* negative_mass_out) {
  KCP_REQUIRE(components);
  return guarded([&] {
    const CMatrix rho = state_from_components(components, len);
    if (min_eigenvalue) *min_eigenvalue = hermitian_eigen(rho).eigenvalues(0);
    if (negative_mass_out) *negative_mass_out = negative_mass(rho);
  });
}

kcp_status kcp_decay_rate(const kcp_hamiltonian* h, const kcp_params* p,
                          const double rho0[4], const kcp_complex op[4],
                          const double* times, size_t count, double* values) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(p);
  KCP_REQUIRE(rho0);
  KCP_REQUIRE(op);
  if (count > 0) {
    KCP_REQUIRE(times);
    KCP_REQUIRE(values);
  }
  return guarded([&] {
    const DecayObservable o{"observable", to_matrix2(op), std::nullopt};
    const ObservableSeries s =
        decay_rate(state_from_components(rho0, 4), o,
                   exponential_family(full_generator(h->h, to_params(*p))),
                   std::vector<double>(times, times + count));
    std::copy(s.values.begin(), s.values.end(), values);
  });
}

kcp_status kcp_asymmetry(const kcp_hamiltonian* h, const kcp_params* p,
                         const kcp_complex o_f[4], const kcp_complex o_fbar[4],
                         const double* times, size_t count, double* values,
                         size_t* produced) {
  KCP_REQUIRE(h);
  KCP_REQUIRE(p);
  KCP_REQUIRE(o_f);
  KCP_REQUIRE(o_fbar);
  KCP_REQUIRE(produced);
  if (count > 0) {
    KCP_REQUIRE(times);
    KCP_REQUIRE(values);
  }
  std::string warning;
  const kcp_status s = guarded([&] {
    const AsymmetrySeries a =
        asymmetry(to_matrix2(o_f), to_matrix2(o_fbar),
                  exponential_family(full_generator(h->h, to_params(*p))),
                  std::vector<double>(times, times + count));
    std::copy(a.series.values.begin(), a.series.values.end(), values);
    *produced = a.series.values.size();
    if (a.warning) warning = *a.warning;
  });
  if (s == KCP_OK && !warning.empty()) g_last_error = warning;
  return s;
}

}  // extern "C"
