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

#include "runners.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace kaoncp::cli {

using ojson = nlohmann::ordered_json;

namespace {

void check(kcp_status s) {
  if (s != KCP_OK) {
    throw ScenarioError(std::string(kcp_status_string(s)) + ": " + kcp_last_error());
  }
}

class Hamiltonian {
 public:
  explicit Hamiltonian(const ScenarioConfig& c) {
    if (c.hamiltonian_from_matrix) {
      check(kcp_hamiltonian_from_matrix(c.hamiltonian, &h_));
    } else {
      check(kcp_hamiltonian_from_widths(c.m_s, c.m_l, c.gamma_s, c.gamma_l, &h_));
    }
  }
  ~Hamiltonian() { kcp_hamiltonian_destroy(h_); }
  Hamiltonian(const Hamiltonian&) = delete;
  Hamiltonian& operator=(const Hamiltonian&) = delete;

  const kcp_hamiltonian* get() const { return h_; }

 private:
  kcp_hamiltonian* h_ = nullptr;
};

class Map {
 public:
  Map() = default;
  ~Map() { kcp_map_destroy(m_); }
  Map(const Map&) = delete;
  Map& operator=(const Map&) = delete;

  kcp_map** out() {
    kcp_map_destroy(m_);
    m_ = nullptr;
    return &m_;
  }
  const kcp_map* get() const { return m_; }

 private:
  kcp_map* m_ = nullptr;
};

std::vector<double> map_matrix(const Map& m) {
  const std::size_t d = kcp_map_dim(m.get());
  std::vector<double> out(d * d);
  check(kcp_map_matrix(m.get(), out.data(), out.size()));
  return out;
}

ojson metadata(const char* subcommand, const ScenarioConfig& c) {
  ojson m = ojson::object();
  m["subcommand"] = subcommand;
  m["library_version"] = kcp_version();
  m["system"] = c.system == System::Single ? "single" : "two-kaon";
  m["params"] = {{"a", c.params.a},         {"b", c.params.b},
                 {"c", c.params.c},         {"alpha", c.params.alpha},
                 {"beta", c.params.beta},   {"gamma", c.params.gamma}};
  m["time_grid"] = {{"start", c.t_start}, {"end", c.t_end}, {"steps", c.steps}};
  return m;
}

std::string render(const Table& t, Format f, ojson meta) {
  if (f == Format::Csv) return to_csv(t);
  ojson doc = to_json(t);
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

bool dissipation_is_pure(const kcp_params& p) {
  return p.a == 0.0 && p.b == 0.0 && p.c == 0.0;
}

const char* const kParamNames[6] = {"a", "b", "c", "alpha", "beta", "gamma"};

double& param_ref(kcp_params& p, const std::string& name) {
  if (name == "a") return p.a;
  if (name == "b") return p.b;
  if (name == "c") return p.c;
  if (name == "alpha") return p.alpha;
  if (name == "beta") return p.beta;
  return p.gamma;
}

}  // namespace

double CpAssessment::min_choi_eigenvalue() const {
  double m = std::numeric_limits<double>::infinity();
  for (const ChoiSample& s : choi_sweep) m = std::min(m, s.min_eigenvalue);
  return m;
}

CpAssessment assess_cp(const ScenarioConfig& config, const kcp_params& params) {
  check(kcp_params_validate(&params));
  const Hamiltonian h(config);
  CpAssessment a;
  check(kcp_cp_inequalities(&params, &a.inequalities));
  int positive = 0;
  check(kcp_positive_semigroup(&params, &positive));
  a.positive_semigroup = positive != 0;

  bool choi_clean = true;
  double first_bad = -1.0;
  for (double t : config.times()) {
    Map m;
    check(kcp_map_evolve(h.get(), &params, t, m.out()));
    kcp_cp_check cp{};
    check(kcp_map_cp_check(m.get(), &cp));
    a.choi_sweep.push_back({t, cp.min_choi_eigenvalue, cp.completely_positive != 0});
    if (!cp.completely_positive && choi_clean) {
      choi_clean = false;
      first_bad = t;
    }
  }
  const bool eq_pass = a.inequalities.all_passed != 0;
  if (eq_pass && choi_clean) {
    a.verdict = "CP";
  } else {
    a.verdict = a.positive_semigroup ? "simply-positive" : "not-positive";
  }
  if (eq_pass && !choi_clean) {
    std::ostringstream os;
    os << "all six inequalities pass but the Choi matrix is negative from t="
       << format_double(first_bad);
    a.findings.push_back(os.str());
  }
  if (!eq_pass && choi_clean) {
    a.findings.push_back(
        "inequalities fail but every sampled finite-time map is completely positive");
  }
  return a;
}

RunResult run_check_cp(const ScenarioConfig& config, Format format) {
  const CpAssessment a = assess_cp(config, config.params);
  RunResult r;
  r.messages.push_back("verdict: " + a.verdict);
  for (const std::string& f : a.findings) r.messages.push_back("finding: " + f);

  if (format == Format::Csv) {
    Table t{{"t", "min_choi_eigenvalue", "completely_positive"}, {}};
    for (const ChoiSample& s : a.choi_sweep) {
      t.rows.push_back({s.t, s.min_eigenvalue, s.completely_positive});
    }
    r.output = to_csv(t);
  } else {
    ojson doc = ojson::object();
    doc["verdict"] = a.verdict;
    doc["inequalities"] = ojson::array();
    for (int i = 0; i < KCP_NUM_INEQUALITIES; ++i) {
      doc["inequalities"].push_back({{"name", kcp_inequality_name(i)},
                                     {"margin", a.inequalities.margin[i]},
                                     {"passed", a.inequalities.passed[i] != 0}});
    }
    doc["choi_sweep"] = ojson::array();
    for (const ChoiSample& s : a.choi_sweep) {
      doc["choi_sweep"].push_back({{"t", s.t},
                                   {"min_eigenvalue", s.min_eigenvalue},
                                   {"completely_positive", s.completely_positive}});
    }
    ojson meta = metadata("check-cp", config);
    meta["positive_semigroup"] = a.positive_semigroup;
    meta["findings"] = a.findings;
    doc["metadata"] = std::move(meta);
    r.output = doc.dump(2) + "\n";
  }
  if (config.expect_verdict && *config.expect_verdict != a.verdict) {
    r.exit_code = 1;
    r.messages.push_back("expected verdict " + *config.expect_verdict + ", got " + a.verdict);
  }
  return r;
}

RunResult run_evolve(const ScenarioConfig& config, Format format) {
  check(kcp_params_validate(&config.params));
  const Hamiltonian h(config);
  const bool two = config.system == System::TwoKaon;

  Table t{{"t", "rho0", "rho1", "rho2", "rho3", "trace", "min_eigenvalue"}, {}};
  std::vector<std::array<double, 4>> ops;
  for (const NamedOperator& o : config.observables) {
    t.columns.push_back(o.name);
    std::array<double, 4> b{};
    operator_bloch(o.op, b.data());
    ops.push_back(b);
  }

  std::vector<double> initial(two ? 16 : 4);
  if (two) {
    check(kcp_singlet_components(initial.data()));
  } else {
    std::copy(config.rho0, config.rho0 + 4, initial.begin());
  }

  for (double time : config.times()) {
    Map single, full;
    check(kcp_map_evolve(h.get(), &config.params, time, single.out()));
    const Map* used = &single;
    if (two) {
      check(kcp_map_product(single.get(), full.out()));
      used = &full;
    }
    std::vector<double> state(initial.size());
    check(kcp_map_apply(used->get(), initial.data(), state.data(), state.size()));
    double min_eig = 0.0;
    check(kcp_state_spectrum(state.data(), state.size(), &min_eig, nullptr));

    // One-kaon components; for pairs the reduced state of the first kaon.
    double rho[4];
    for (int mu = 0; mu < 4; ++mu) rho[mu] = two ? 2.0 * state[4 * mu] : state[mu];
    const double trace = two ? 4.0 * state[0] : 2.0 * state[0];

    std::vector<Cell> row{time, rho[0], rho[1], rho[2], rho[3], trace, min_eig};
    for (const auto& o : ops) {
      double v = 0.0;
      for (int mu = 0; mu < 4; ++mu) v += 2.0 * rho[mu] * o[mu];
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  RunResult r;
  r.output = render(t, format, metadata("evolve", config));
  return r;
}

RunResult run_two_kaon(const ScenarioConfig& config, Format format) {
  if (!dissipation_is_pure(config.params)) {
    throw ScenarioError("two-kaon requires a = b = c = 0 in the dissipative block");
  }
  check(kcp_params_validate(&config.params));
  const Hamiltonian h(config);
  const kcp_params& p = config.params;

  Table t{{"t", "witness_u", "witness_closed_form", "negative_mass", "bound_rhs", "bound_holds"}, {}};
  long failures = 0;
  for (double time : config.times()) {
    kcp_two_kaon_witness_values w{};
    check(kcp_two_kaon_witness(p.alpha, p.beta, p.gamma, time, &w));
    kcp_bound_report b{};
    check(kcp_trotter_bound(h.get(), p.alpha, p.beta, p.gamma, time, config.trotter_n, &b));
    if (!b.holds) ++failures;
    t.rows.push_back({time, w.value_u, w.closed_form, b.lhs, b.rhs, b.holds != 0});
  }
  RunResult r;
  ojson meta = metadata("two-kaon", config);
  meta["trotter_n"] = config.trotter_n;
  r.output = render(t, format, std::move(meta));
  if (failures > 0) {
    r.exit_code = 1;
    r.messages.push_back("negative-mass bound fails at " + std::to_string(failures) + " of " +
                         std::to_string(t.rows.size()) + " grid points");
  }
  return r;
}

RunResult run_trotter(const ScenarioConfig& config, Format format) {
  check(kcp_params_validate(&config.params));
  const Hamiltonian h(config);
  const kcp_params& p = config.params;
  const double time = config.t_end;
  // The singlet bound needs the closed-form single-kaon map.
  int positive = 0;
  check(kcp_positive_semigroup(&p, &positive));
  const bool bound = dissipation_is_pure(p) && positive != 0;

  Map exact;
  check(kcp_map_evolve(h.get(), &p, time, exact.out()));
  const std::vector<double> e = map_matrix(exact);

  Table t{{"n", "error", "ratio"}, {}};
  if (bound) {
    for (const char* c : {"bound_lhs", "bound_rhs", "bound_holds"}) t.columns.push_back(c);
  }
  long failures = 0;
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (long n = 1; n <= config.trotter_n; n *= 2) {
    Map m;
    check(kcp_map_trotter(h.get(), &p, time, static_cast<int>(n), m.out()));
    const std::vector<double> a = map_matrix(m);
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) err += (a[i] - e[i]) * (a[i] - e[i]);
    err = std::sqrt(err);
    std::vector<Cell> row{n, err, previous / err};
    previous = err;
    if (bound) {
      kcp_bound_report b{};
      check(kcp_trotter_bound(h.get(), p.alpha, p.beta, p.gamma, time, static_cast<int>(n), &b));
      if (!b.holds) ++failures;
      row.insert(row.end(), {b.lhs, b.rhs, b.holds != 0});
    }
    t.rows.push_back(std::move(row));
  }
  RunResult r;
  ojson meta = metadata("trotter", config);
  meta["t"] = time;
  r.output = render(t, format, std::move(meta));
  if (failures > 0) {
    r.exit_code = 1;
    r.messages.push_back("negative-mass bound fails for " + std::to_string(failures) + " of " +
                         std::to_string(t.rows.size()) + " step counts");
  }
  return r;
}

RunResult run_sweep(const ScenarioConfig& config, Format format, unsigned threads) {
  if (config.axes.empty()) throw ScenarioError("sweep requires a 'sweep.axes' block");

  // Cartesian grid, first axis slowest.
  std::vector<std::vector<double>> values;
  std::size_t total = 1;
  for (const SweepAxis& a : config.axes) {
    values.push_back(a.values());
    total *= values.back().size();
  }
  std::vector<kcp_params> points(total, config.params);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i;
    for (std::size_t k = config.axes.size(); k-- > 0;) {
      param_ref(points[i], config.axes[k].param) = values[k][rest % values[k].size()];
      rest /= values[k].size();
    }
  }

  std::vector<std::vector<Cell>> rows(total);
  std::vector<std::string> errors(total);
  const auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < total; i += step) {
      try {
        const CpAssessment a = assess_cp(config, points[i]);
        const kcp_params& p = points[i];
        rows[i] = {p.a, p.b, p.c, p.alpha, p.beta, p.gamma,
                   a.inequalities.min_margin, a.inequalities.all_passed != 0,
                   a.positive_semigroup, a.min_choi_eigenvalue(), a.verdict};
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work, k, threads);
  work(0, threads);
  for (auto& th : pool) th.join();

  for (std::size_t i = 0; i < total; ++i) {
    if (!errors[i].empty()) throw ScenarioError("sweep point " + std::to_string(i) + ": " + errors[i]);
  }
  Table t{{}, std::move(rows)};
  for (const char* n : kParamNames) t.columns.push_back(n);
  for (const char* n : {"min_margin", "inequalities_pass", "positive_semigroup",
                        "min_choi_eigenvalue", "verdict"}) {
    t.columns.push_back(n);
  }
  RunResult r;
  r.output = render(t, format, metadata("sweep", config));
  return r;
}

}  // namespace kaoncp::cli
