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

#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"
#include "format.hpp"

namespace kaoncp::cli {

enum class Format { Csv, Json };

// A library call rejected the scenario (e.g. a domain violation).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunResult {
  std::string output;
  int exit_code = 0;                  // 0 ok, 1 failed physical checks
  std::vector<std::string> messages;  // human-readable, for stderr
};

struct ChoiSample {
  double t = 0.0;
  double min_eigenvalue = 0.0;
  bool completely_positive = true;
};

struct CpAssessment {
  kcp_inequality_report inequalities{};
  std::vector<ChoiSample> choi_sweep;
  bool positive_semigroup = false;
  std::string verdict;  // CP | simply-positive | not-positive
  std::vector<std::string> findings;

  double min_choi_eigenvalue() const;
};

// Inequalities on the generator plus Choi matrices of the full single-kaon
// map at every grid time.
CpAssessment assess_cp(const ScenarioConfig& config, const kcp_params& params);

RunResult run_check_cp(const ScenarioConfig& config, Format format);
RunResult run_evolve(const ScenarioConfig& config, Format format);
RunResult run_two_kaon(const ScenarioConfig& config, Format format);
RunResult run_trotter(const ScenarioConfig& config, Format format);
RunResult run_sweep(const ScenarioConfig& config, Format format, unsigned threads = 0);

}  // namespace kaoncp::cli
