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

#include "qlp/report.hpp"

#include "qlp/error.hpp"
#include "qlp/io.hpp"

namespace qlp {

using nlohmann::json;

namespace {

json number_map(const std::map<std::string, double>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = double_to_json(v);
  return out;
}

std::map<std::string, double> read_number_map(const json& j) {
  std::map<std::string, double> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = json_to_double(it.value());
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorKind::ParseError, std::string("report is missing field '") + name + "'");
  }
  return j.at(name);
}

}  // namespace

json report_to_json(const VerificationReport& report, bool with_wall_time) {
  json j = json::object();
  j["version"] = report.version;
  j["suite"] = report.suite;
  j["config"] = report.config;
  j["pass"] = report.pass;
  j["max_violation"] = double_to_json(report.max_violation);
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"tolerance", double_to_json(c.tolerance)},
                      {"max_violation", double_to_json(c.max_violation)},
                      {"count", c.count},
                      {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  json trials = json::array();
  for (const auto& t : report.trials) {
    trials.push_back({{"trial", t.trial},
                      {"dim", t.dim},
                      {"digest", t.digest},
                      {"values", number_map(t.values)},
                      {"violations", number_map(t.violations)},
                      {"max_violation", double_to_json(t.max_violation)}});
  }
  j["trials"] = std::move(trials);
  if (with_wall_time) j["wall_time"] = report.wall_time;
  return j;
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.version = field(j, "version").get<std::string>();
    if (r.version != kReportVersion) {
      throw Error(ErrorKind::ParseError, "unsupported report version " + r.version);
    }
    r.suite = field(j, "suite").get<std::string>();
    r.config = field(j, "config");
    r.pass = field(j, "pass").get<bool>();
    r.max_violation = json_to_double(field(j, "max_violation"));
    for (const auto& c : field(j, "checks")) {
      r.checks.push_back({field(c, "name").get<std::string>(),
                          json_to_double(field(c, "tolerance")),
                          json_to_double(field(c, "max_violation")),
                          field(c, "count").get<std::int64_t>(), field(c, "pass").get<bool>()});
    }
    for (const auto& t : field(j, "trials")) {
      r.trials.push_back({field(t, "trial").get<std::int64_t>(),
                          field(t, "dim").get<std::int64_t>(),
                          field(t, "digest").get<std::string>(),
                          read_number_map(field(t, "values")),
                          read_number_map(field(t, "violations")),
                          json_to_double(field(t, "max_violation"))});
    }
    if (j.contains("wall_time")) r.wall_time = json_to_double(j.at("wall_time"));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string report_body(const VerificationReport& report) {
  return dump_json(report_to_json(report, false));
}

std::string format_report(const VerificationReport& report) {
  return dump_json(report_to_json(report)) + "\n";
}

VerificationReport parse_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return report_from_json(doc);
}

void save_report(const VerificationReport& report, const std::filesystem::path& path) {
  write_file(path, format_report(report));
}

VerificationReport load_report(const std::filesystem::path& path) {
  return parse_report(read_file(path));
}

}  // namespace qlp
