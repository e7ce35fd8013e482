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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kaoncp/kaoncp.h"

namespace kaoncp::cli {

// Raised for malformed or inconsistent scenario files. `line` is 0 when the
// location is unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, int line, std::string field, const std::string& msg);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  int line_;
  std::string field_;
};

enum class System { Single, TwoKaon };

struct NamedOperator {
  std::string name;
  kcp_complex op[4];  // row-major 2x2 in the K1/K2 basis
};

struct SweepAxis {
  std::string param;  // one of a, b, c, alpha, beta, gamma
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const;
};

struct ScenarioConfig {
  System system = System::Single;

  bool hamiltonian_from_matrix = false;
  kcp_complex hamiltonian[4] = {};
  double m_s = 0.0, m_l = 0.0, gamma_s = 0.0, gamma_l = 0.0;

  kcp_params params = {};

  double t_start = 0.0;
  double t_end = 1.0;
  int steps = 1;
  int trotter_n = 1024;

  double rho0[4] = {0.5, 0.0, 0.0, 0.5};  // Bloch components, K1 by default
  std::vector<NamedOperator> observables;
  std::vector<SweepAxis> axes;

  std::optional<std::string> expect_verdict;
  std::optional<std::string> output;

  // steps + 1 points, endpoints included.
  std::vector<double> times() const;
};

constexpr int kMaxSteps = 1000000;
constexpr int kMaxTrotterSteps = 1 << 20;
constexpr long kMaxSweepPoints = 1000000;

// Components O^mu = Tr(sigma_mu O) / 2 of a Hermitian 2x2 operator.
void operator_bloch(const kcp_complex m[4], double out[4]);

ScenarioConfig parse_config(const std::string& text, const std::string& source);
ScenarioConfig load_config(const std::string& path);

}  // namespace kaoncp::cli
