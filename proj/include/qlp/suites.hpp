// Copyright 2026 The qlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLP_SUITES_HPP
#define QLP_SUITES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qlp/report.hpp"

namespace qlp {

struct SuiteConfig {
  std::string suite;
  std::vector<std::int64_t> dims;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<double> p_grid;  // +inf allowed where a norm index is meant
  std::map<std::string, double> tolerance_overrides;
  double quadrature_half_width = 8.0;
  double quadrature_step = 1.0 / 64.0;
  // Worker threads; 0 means one per hardware thread. Not part of the echoed
  // configuration because results do not depend on it.
  int threads = 0;
};

const std::vector<std::string>& suite_names();

// Defaults for dims, trials and p_grid. Throws ConfigError for an unknown
// suite.
SuiteConfig default_config(std::string_view suite);

// Tolerance per check, before overrides.
const std::map<std::string, double>& default_tolerances(std::string_view suite);

// Defaults merged with overrides.
std::map<std::string, double> effective_tolerances(const SuiteConfig& cfg);

// Throws ConfigError naming the offending field.
void validate(const SuiteConfig& cfg);

nlohmann::json config_to_json(const SuiteConfig& cfg);

// Runs cfg.trials trials for every dimension. Each (dim, trial) pair draws
// from its own counter-based stream, so the report does not depend on the
// thread count or scheduling.
VerificationReport run_suite(const SuiteConfig& cfg);

}  // namespace qlp

#endif  // QLP_SUITES_HPP
