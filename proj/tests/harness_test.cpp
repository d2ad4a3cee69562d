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


#include <cmath>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlp/io.hpp"
#include "qlp/random.hpp"
#include "qlp/report.hpp"
#include "qlp/suites.hpp"
#include "support.hpp"

namespace qlp {
namespace {

using testing::throws_kind;

const std::filesystem::path kData = QLP_TEST_DATA;

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qlp_harness_test_" + name);
}

TEST(RandomStream, SameKeySameStream) {
  RandomStream a = RandomStream::for_trial(7, "schatten", 3, 11);
  RandomStream b = RandomStream::for_trial(7, "schatten", 3, 11);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a(), b());
  RandomStream c = RandomStream::for_trial(7, "schatten", 3, 12);
  RandomStream d = RandomStream::for_trial(7, "weighted", 3, 11);
  RandomStream e = RandomStream::for_trial(8, "schatten", 3, 11);
  const auto first = RandomStream::for_trial(7, "schatten", 3, 11)();
  EXPECT_NE(c(), first);
  EXPECT_NE(d(), first);
  EXPECT_NE(e(), first);
}

TEST(RandomStream, UniformAndIndexRanges) {
  RandomStream rng(1);
  double mean = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    mean += u / 10000.0;
    ASSERT_LT(rng.index(7), 7u);
  }
  EXPECT_NEAR(mean, 0.5, 0.02);
}

TEST(SampleFaithfulState, ScalarCase) {
  RandomStream rng(2);
  const FaithfulState s = sample_faithful_state(1, rng);
  EXPECT_EQ(s.dim(), 1);
  EXPECT_NEAR(s.matrix()(0, 0).real(), 1.0, 1e-15);
}

TEST(SampleFaithfulState, UnitTraceAndFaithful) {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    RandomStream rng = RandomStream::for_trial(3, "harness", 5, trial);
    const FaithfulState s = sample_faithful_state(5, rng);
    EXPECT_NEAR(s.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GE(static_cast<double>(oracle::eigenvalues(s.matrix()).back()), 1e-10);
  }
}

TEST(SampleFaithfulState, Deterministic) {
  RandomStream a = RandomStream::for_trial(4, "dpi", 3, 9);
  RandomStream b = RandomStream::for_trial(4, "dpi", 3, 9);
  EXPECT_EQ(sample_faithful_state(3, a).matrix(), sample_faithful_state(3, b).matrix());
}

TEST(MatrixIo, IdentityFixture) {
  EXPECT_EQ(load_matrix(kData / "identity2.json"), ComplexMatrix::Identity(2, 2));
}

TEST(MatrixIo, RoundTripIsExact) {
  RandomStream rng(5);
  const ComplexMatrix m = ginibre(4, rng) * 1e-7 + ginibre(4, rng);
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  const auto path = scratch("roundtrip.json");
  save_matrix(m, path);
  EXPECT_EQ(load_matrix(path), m);
  std::filesystem::remove(path);
}

TEST(MatrixIo, MalformedEntryNamesTheIndex) {
  try {
    load_matrix(kData / "malformed.json");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("matrix[1][1]"), std::string::npos) << e.what();
  }
}

TEST(MatrixIo, Errors) {
  EXPECT_TRUE(throws_kind([] { parse_matrix("{"); }, ErrorKind::ParseError));
  EXPECT_TRUE(throws_kind([] { parse_matrix(R"({"dim": 0, "matrix": []})"); }, ErrorKind::ParseError));
  EXPECT_TRUE(throws_kind([] { parse_matrix(R"({"dim": 2, "matrix": [[[1, 0], [0, 0]]]})"); },
                          ErrorKind::DimensionMismatch));
  EXPECT_TRUE(throws_kind([] { parse_matrix(R"({"dim": 1, "matrix": [[[1, 0], [0, 0]]]})"); },
                          ErrorKind::DimensionMismatch));
  EXPECT_TRUE(throws_kind([] { load_matrix(kData / "does_not_exist.json"); }, ErrorKind::IoError));
}

TEST(Json, NonFiniteNumbersRoundTrip) {
  for (double x : {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                   0.1, -3e-300}) {
    EXPECT_EQ(json_to_double(nlohmann::json::parse(dump_json(double_to_json(x)))), x);
  }
  EXPECT_TRUE(std::isnan(json_to_double(double_to_json(std::numeric_limits<double>::quiet_NaN()))));
}

SuiteConfig small(std::string suite) {
  SuiteConfig cfg = default_config(suite);
  cfg.dims = {2, 3};
  cfg.trials = 5;
  cfg.seed = 7;
  return cfg;
}

TEST(Report, SaveLoadRoundTripIsExact) {
  const VerificationReport rep = run_suite(small("schatten"));
  const auto path = scratch("report.json");
  save_report(rep, path);
  const VerificationReport back = load_report(path);
  EXPECT_EQ(back, rep);
  EXPECT_EQ(back.version, kReportVersion);
  std::filesystem::remove(path);
}

TEST(Report, EchoesEffectiveConfiguration) {
  SuiteConfig cfg = small("weighted");
  const VerificationReport rep = run_suite(cfg);
  EXPECT_EQ(rep.suite, "weighted");
  EXPECT_EQ(rep.config, config_to_json(cfg));
  // Every defaulted tolerance shows up, each check summary included.
  for (const auto& [name, tol] : default_tolerances("weighted")) {
    bool found = false;
    for (const auto& c : rep.checks) {
      if (c.name == name) {
        found = true;
        EXPECT_EQ(c.tolerance, tol);
      }
    }
    EXPECT_TRUE(found) << name;
  }
  EXPECT_EQ(rep.trials.size(), 10u);
}

TEST(Report, PassMeansEveryCheckWithinItsTolerance) {
  const VerificationReport rep = run_suite(small("schatten"));
  bool all = true;
  for (const auto& c : rep.checks) {
    EXPECT_EQ(c.pass, c.max_violation <= c.tolerance);
    all = all && c.pass;
  }
  EXPECT_EQ(rep.pass, all);
}

TEST(Suites, SchattenExampleRun) {
  SuiteConfig cfg = default_config("schatten");
  cfg.dims = {2, 4};
  cfg.trials = 100;
  cfg.seed = 7;
  const VerificationReport rep = run_suite(cfg);
  EXPECT_TRUE(rep.pass);
  EXPECT_LE(rep.max_violation, 1e-9);
}

TEST(Suites, DeterministicAcrossRunsAndThreadCounts) {
  for (const std::string suite : {"schatten", "dpi", "three_lines"}) {
    SuiteConfig cfg = small(suite);
    cfg.threads = 1;
    const std::string one = report_body(run_suite(cfg));
    EXPECT_EQ(report_body(run_suite(cfg)), one) << suite;
    cfg.threads = 4;
    EXPECT_EQ(report_body(run_suite(cfg)), one) << suite;
  }
}

TEST(Config, Validation) {
  SuiteConfig dpi = default_config("dpi");
  dpi.p_grid = {0.3, 2.0};
  EXPECT_TRUE(throws_kind([&] { validate(dpi); }, ErrorKind::ConfigError));
  EXPECT_TRUE(throws_kind([&] { run_suite(dpi); }, ErrorKind::ConfigError));

  EXPECT_TRUE(throws_kind([] { default_config("nope"); }, ErrorKind::ConfigError));

  SuiteConfig c = default_config("schatten");
  c.trials = 0;
  EXPECT_TRUE(throws_kind([&] { validate(c); }, ErrorKind::ConfigError));
  c = default_config("schatten");
  c.dims = {0};
  EXPECT_TRUE(throws_kind([&] { validate(c); }, ErrorKind::ConfigError));
  c = default_config("renyi_mono");
  c.p_grid = {0.5, 1.0, 2.0};
  EXPECT_TRUE(throws_kind([&] { validate(c); }, ErrorKind::ConfigError));
  c = default_config("schatten");
  c.tolerance_overrides["no_such_check"] = 1.0;
  EXPECT_TRUE(throws_kind([&] { validate(c); }, ErrorKind::ConfigError));
  c = default_config("hirschman");
  c.quadrature_step = 0.3;
  EXPECT_TRUE(throws_kind([&] { validate(c); }, ErrorKind::ConfigError));
  for (const auto& name : suite_names()) EXPECT_NO_THROW(validate(default_config(name))) << name;
}

TEST(Config, ErrorNamesTheField) {
  SuiteConfig c = default_config("dpi");
  c.p_grid = {0.3};
  try {
    validate(c);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("p_grid"), std::string::npos) << e.what();
  }
}

TEST(Config, ToleranceOverridesApply) {
  SuiteConfig c = small("schatten");
  c.tolerance_overrides["holder"] = 0.5;
  EXPECT_EQ(effective_tolerances(c).at("holder"), 0.5);
  const VerificationReport rep = run_suite(c);
  for (const auto& check : rep.checks) {
    if (check.name == "holder") EXPECT_EQ(check.tolerance, 0.5);
  }
}

}  // namespace
}  // namespace qlp
