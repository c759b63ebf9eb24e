#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "ndf/experiment.hpp"

namespace ndf {
namespace {

using experiment::Overrides;
using experiment::run;
using nlohmann::json;

std::string failing_path(const json& config) {
  try {
    run(config);
  } catch (const json_io::DecodeError& e) {
    return e.path();
  }
  return "<no error>";
}

const json kCounterexample = json::parse(R"({"command": "counterexample",
  "parameters": {"alpha": 3, "c": 1, "M": 10, "M_grid": [1, 2, 5, 10, 20]}})");

TEST(Experiment, CounterexampleReport) {
  const auto r = run(kCounterexample);
  EXPECT_EQ(r.exit_code, experiment::kPassed);
  const auto& res = r.document["results"];
  EXPECT_NEAR(res["gap_closed_form"].get<double>(), 21.88, 1e-12);
  EXPECT_TRUE(res["violation_expected"].get<bool>());
  EXPECT_TRUE(res["sufficient_condition"].get<bool>());
  EXPECT_EQ(res["first_violation_M"].get<double>(), 5.0);
  EXPECT_EQ(r.table.header, (std::vector<std::string>{"alpha", "c", "M", "p", "q", "closed_form", "enumerated", "violation"}));
  EXPECT_EQ(r.table.rows.size(), 6u);
  EXPECT_EQ(r.table.rows[0][2], "10");
  EXPECT_EQ(r.table.rows[0][7], "true");
  EXPECT_EQ(r.document["inputs"], kCounterexample);
  EXPECT_TRUE(r.document.contains("config_hash"));
}

TEST(Experiment, CounterexampleBelowThresholdExponent) {
  const auto r = run(json::parse(R"({"command": "counterexample", "parameters": {"alpha": 1, "c": 1, "M": 10}})"));
  EXPECT_EQ(r.exit_code, experiment::kPassed);
  EXPECT_NEAR(r.document["results"]["gap_closed_form"].get<double>(), -1.46, 1e-12);
  EXPECT_FALSE(r.document["results"]["violation_expected"].get<bool>());
}

TEST(Experiment, EmptyReportIsHeaderOnly) {
  const auto r = run(json::parse(R"({"command": "counterexample", "parameters": {"alpha": 3, "c": 5, "M_grid": [2, 3]}})"));
  EXPECT_EQ(r.table.str(), "alpha,c,M,p,q,closed_form,enumerated,violation\n");
  EXPECT_TRUE(r.document["results"]["first_violation_M"].is_null());
}

TEST(Experiment, VerifyInequalityExact) {
  const auto r = run(json::parse(R"({"command": "verify-inequality",
    "psi": {"variant": "EuclideanPower", "dim": 1, "alpha": 1},
    "distribution": {"atoms": [0, 1], "weights": [0.5, 0.5]}})"));
  EXPECT_EQ(r.exit_code, experiment::kPassed);
  EXPECT_EQ(r.table.header,
            (std::vector<std::string>{"psi_id", "law_id", "e_minus", "e_plus", "gap", "method", "n_samples", "stderr", "seed"}));
  ASSERT_EQ(r.table.rows.size(), 1u);
  EXPECT_EQ(r.table.rows[0][2], "0.5");
  EXPECT_EQ(r.table.rows[0][3], "1");
  EXPECT_EQ(r.table.rows[0][4], "0.5");
  EXPECT_EQ(r.table.rows[0][5], "exact");
}

const json kVerifyMc = json::parse(R"({"command": "verify-inequality",
  "psi": {"variant": "EuclideanPower", "dim": 2, "alpha": 1.2},
  "sampler": {"variant": "GaussianIso", "dim": 2, "sigma": 1},
  "parameters": {"N": 10000, "seed": 99}})");

TEST(Experiment, MonteCarloDeterminism) {
  const auto a = run(kVerifyMc);
  const auto b = run(kVerifyMc);
  Overrides threaded;
  threaded.threads = 3;
  const auto c = run(kVerifyMc, threaded);
  EXPECT_EQ(a.table.str(), b.table.str());
  EXPECT_EQ(a.table.str(), c.table.str());
  EXPECT_EQ(a.document.dump(), b.document.dump());
  // Symmetric law: equality holds, so the verdict cannot be a violation.
  EXPECT_NE(a.document["results"]["verdict"], "ViolationDetected");
  EXPECT_EQ(a.table.rows[0][8], "99");
}

TEST(Experiment, OverridesAreEchoed) {
  Overrides o;
  o.seed = 5;
  o.samples = 200;
  const auto r = run(kVerifyMc, o);
  EXPECT_EQ(r.document["inputs"]["parameters"]["N"], 200);
  EXPECT_EQ(r.document["inputs"]["parameters"]["seed"], "0x0000000000000005");
  EXPECT_EQ(r.table.rows[0][6], "200");
  EXPECT_NE(r.document["config_hash"], run(kVerifyMc).document["config_hash"]);
  // The echoed config reproduces the overridden run.
  EXPECT_EQ(run(r.document["inputs"]).table.str(), r.table.str());
}

TEST(Experiment, MathematicalFailureExitsOne) {
  // Zero tolerance exposes last-bit differences between the two evaluation paths.
  const auto r = run(json::parse(R"({"command": "counterexample",
    "parameters": {"alpha": 3.3, "c": 1, "M_grid": [2, 3, 4, 5], "tolerance": 0}})"));
  EXPECT_EQ(r.exit_code, experiment::kCheckFailed);
  EXPECT_FALSE(r.document["passed"].get<bool>());
}

TEST(Experiment, CheckKernel) {
  const auto r = run(json::parse(R"({"command": "check-kernel",
    "psi": {"variant": "EuclideanPower", "dim": 1, "alpha": 1},
    "parameters": {"points": [1, -10]}})"));
  EXPECT_EQ(r.exit_code, experiment::kPassed);
  EXPECT_EQ(r.table.str(), "0,1\n2,-2\n-2,20\n");
}

TEST(Experiment, TailIdentityAndVariance) {
  const auto t = run(json::parse(R"({"command": "tail-identity",
    "distribution": {"atoms": [0, 1], "weights": [0.7, 0.3]}})"));
  EXPECT_EQ(t.exit_code, experiment::kPassed);
  EXPECT_NEAR(t.document["results"]["lhs"].get<double>(), 0.18, 1e-15);
  EXPECT_EQ(t.table.header, (std::vector<std::string>{"law_id", "lhs", "rhs", "abs_diff", "diff_sup", "sum_sup"}));

  const auto v = run(json::parse(R"({"command": "variance-identity",
    "psi": {"variant": "EuclideanPower", "dim": 1, "alpha": 1},
    "distribution": {"atoms": [0, 1], "weights": [0.5, 0.5]}})"));
  EXPECT_EQ(v.exit_code, experiment::kPassed);
  EXPECT_DOUBLE_EQ(v.document["results"]["gap"].get<double>(), 0.5);
}

TEST(Experiment, SimulateBbmCsv) {
  const auto r = run(json::parse(R"({"command": "simulate-bbm",
    "parameters": {"H": 0.5, "K": 1, "grid": [0, 0.5, 1], "n_paths": 4, "seed": 1}})"));
  EXPECT_EQ(r.exit_code, experiment::kPassed);
  EXPECT_EQ(r.table.header, (std::vector<std::string>{"0", "0.5", "1"}));
  ASSERT_EQ(r.table.rows.size(), 4u);
  for (const auto& row : r.table.rows) EXPECT_EQ(row[0], "0");
}

TEST(Experiment, SignedSumExactAndFallback) {
  const auto r = run(json::parse(R"({"command": "signed-sum",
    "psi": {"variant": "EuclideanPower", "dim": 1, "alpha": 1},
    "distribution": {"atoms": [0, 1], "weights": [0.5, 0.5]},
    "parameters": {"pattern": [1, 1, -1, -1]}})"));
  EXPECT_EQ(r.document["results"]["method"], "exact");
  EXPECT_DOUBLE_EQ(r.document["results"]["gap"].get<double>(), 1.25);
  EXPECT_EQ(r.table.rows[0][2], "++--");

  json big = json::parse(R"({"command": "signed-sum",
    "psi": {"variant": "EuclideanPower", "dim": 1, "alpha": 1},
    "distribution": {"atoms": [], "weights": []},
    "parameters": {"pattern": [1, -1, 1, -1, 1, -1, 1, -1], "N": 1000, "seed": 3}})");
  for (int i = 0; i < 10; ++i) {
    big["distribution"]["atoms"].push_back(i);
    big["distribution"]["weights"].push_back(0.1);
  }
  const auto mc = run(big);
  EXPECT_EQ(mc.document["results"]["method"], "monte_carlo");
  EXPECT_EQ(mc.exit_code, experiment::kPassed);
}

TEST(Experiment, ConfigErrorsCarryPaths) {
  EXPECT_EQ(failing_path(json::parse(R"({"command": "nope"})")), "$.command");
  EXPECT_EQ(failing_path(json::parse(R"({"command": "tail-identity", "extra": 1,
    "distribution": {"atoms": [0], "weights": [1]}})")), "$.extra");
  EXPECT_EQ(failing_path(json::parse(R"({"command": "verify-inequality",
    "distribution": {"atoms": [0], "weights": [1]}})")), "$.psi");
  EXPECT_EQ(failing_path(json::parse(R"({"command": "counterexample", "parameters": {"alpha": 3, "c": 1, "N": 4, "M": 10}})")),
            "$.parameters.N");
  EXPECT_EQ(failing_path(json::parse(R"({"command": "counterexample", "parameters": {"alpha": 3, "c": 1}})")),
            "$.parameters.M");
  EXPECT_EQ(failing_path(json::parse(R"({"command": "verify-inequality",
    "psi": {"variant": "EuclideanPower", "dim": 1, "alpha": 2.5},
    "distribution": {"atoms": [0], "weights": [1]}})")), "psi");
  EXPECT_EQ(failing_path(json::parse(R"({"command": "simulate-bbm",
    "parameters": {"H": 0.8, "K": 1.5, "grid": [0, 1]}})")), "parameters.H");
  EXPECT_EQ(failing_path(json::parse(R"({"command": "verify-inequality",
    "psi": {"variant": "EuclideanPower", "dim": 2, "alpha": 1},
    "distribution": {"atoms": [0], "weights": [1]}})")), "distribution");
}

TEST(Experiment, SchemaIsValidJson) {
  const auto schema = json::parse(experiment::kConfigSchema);
  EXPECT_EQ(schema["properties"]["command"]["enum"].size(), 7u);
}

}  // namespace
}  // namespace ndf
