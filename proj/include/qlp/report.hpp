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

#ifndef QLP_REPORT_HPP
#define QLP_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace qlp {

inline constexpr const char* kReportVersion = "qlp-report/1";

struct TrialRecord {
  std::int64_t trial = 0;
  std::int64_t dim = 0;
  std::string digest;  // FNV-1a of the sampled inputs, hex
  std::map<std::string, double> values;
  std::map<std::string, double> violations;  // per check, largest in this trial
  double max_violation = 0.0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct CheckSummary {
  std::string name;
  double tolerance = 0.0;
  double max_violation = 0.0;
  std::int64_t count = 0;
  bool pass = true;

  friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

// A run passes when every check's largest violation is within that check's
// tolerance. max_violation is the largest raw violation over all checks.
struct VerificationReport {
  std::string version = kReportVersion;
  std::string suite;
  nlohmann::json config;
  std::vector<TrialRecord> trials;
  std::vector<CheckSummary> checks;
  double max_violation = 0.0;
  bool pass = true;
  double wall_time = 0.0;  // seconds

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json report_to_json(const VerificationReport& report, bool with_wall_time = true);
VerificationReport report_from_json(const nlohmann::json& j);

// The serialised report without wall_time: equal for equal configurations.
std::string report_body(const VerificationReport& report);

std::string format_report(const VerificationReport& report);
VerificationReport parse_report(std::string_view text);
void save_report(const VerificationReport& report, const std::filesystem::path& path);
VerificationReport load_report(const std::filesystem::path& path);

}  // namespace qlp

#endif  // QLP_REPORT_HPP
