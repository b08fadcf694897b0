// Copyright 2026 The fgext Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fgext/bounds/family.hpp"
#include "fgext/cli/commands.hpp"
#include "fgext/cli/config.hpp"
#include "fgext/fgs/cm_io.hpp"
#include "test_util.hpp"

namespace fgext {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("fgext_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    ::unsetenv(cli::kConfigEnvVar);
  }
  void TearDown() override {
    ::unsetenv(cli::kConfigEnvVar);
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckCmVacuumFile) {
  const auto f = write("vac.cm", "modes 1\nmatrix\n0 1\n-1 0\n");
  const auto r = run({"check-cm", f});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.doc();
  EXPECT_TRUE(j["bona_fide"].get<bool>());
  EXPECT_TRUE(j["pure"].get<bool>());
  EXPECT_NEAR(j["canonical_lambdas"][0].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, CheckCmFamily) {
  const auto r = run({"check-cm", "family:2,2"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.doc();
  EXPECT_FALSE(j["pure"].get<bool>());
  for (const auto& v : j["spectrum"]) EXPECT_NEAR(std::abs(v.get<double>()), std::sqrt(0.5), 1e-12);
}

TEST_F(CliTest, CheckCmCorruptedFile) {
  const auto f = write("bad.cm", "modes 1\nmatrix\n0 1\n0.5 0\n");
  const auto r = run({"check-cm", f});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.doc()["error"]["code"], "ParseError");
  EXPECT_NE(r.err.find("fgext:"), std::string::npos);
}

TEST_F(CliTest, CheckCmNotBonaFide) {
  const auto f = write("big.cm", "modes 1\nmatrix\n0 1.2\n-1.2 0\n");
  const auto r = run({"check-cm", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.doc()["bona_fide"].get<bool>());
}

TEST_F(CliTest, CheckCmMissingFile) { EXPECT_EQ(run({"check-cm", path("nope.cm")}).code, 3); }

TEST_F(CliTest, ExtendibleFeasible) {
  const auto r = run({"extendible", "family:2,2", "2", "2"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = r.doc();
  EXPECT_EQ(j["status"], "Feasible");
  EXPECT_GE(j["margin"].get<double>(), -1e-7);
}

TEST_F(CliTest, ExtendibleInfeasible) {
  const auto r = run({"extendible", "family:2,2", "3", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.doc()["status"], "Feasible");
}

TEST_F(CliTest, ExtendibleColumnSumCertificate) {
  const auto r = run({"extendible", "eps:0.1", "1", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc()["status"], "InfeasibleCertified");
  EXPECT_EQ(r.doc()["certificate"], "column-sum row 2: 1.0025 > 1");
}

TEST_F(CliTest, ExtendibleFromFileWithSplitAndEmitters) {
  const auto in = path("f22.cm");
  fgs::write_cm_file(in, bounds::family_cm(2, 2).cm().matrix(), std::make_pair(Index{1}, Index{1}));
  const auto r = run({"extendible", in, "2", "2", "--emit-extension", path("ext.cm"), "--emit-witness", path("w")});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto ext = fgs::read_cm_document(path("ext.cm"));
  EXPECT_EQ(ext.modes, 4);
  EXPECT_NO_THROW(fgs::validate_cm(ext.matrix, 1e-7));
  EXPECT_TRUE(fs::exists(path("w_delta_a.cm")));
  EXPECT_TRUE(fs::exists(path("w_delta_b.cm")));
}

TEST_F(CliTest, ExtendibleNeedsSplit) {
  const auto f = write("nosplit.cm", "modes 2\nmatrix\n0 1 0 0\n-1 0 0 0\n0 0 0 1\n0 0 -1 0\n");
  EXPECT_EQ(run({"extendible", f, "2", "1"}).code, 3);
  EXPECT_EQ(run({"extendible", f, "2", "1", "--split", "1", "1"}).code, 0);
}

TEST_F(CliTest, BoundsFromSizes) {
  const auto j = run({"bounds", "--modes", "1", "1", "--k1", "2", "--k2", "2"}).doc()[0];
  EXPECT_DOUBLE_EQ(j["T"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["er_upper"].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(j["esq_upper"].get<double>(), 1.0);
  const auto c = run({"bounds", "--modes", "1", "1", "--k1", "1", "--k2", "1"}).doc()[0];
  EXPECT_DOUBLE_EQ(c["T"].get<double>(), 2.0);
}

TEST_F(CliTest, BoundsFromFamilyCm) {
  const auto j = run({"bounds", "--cm", "family:3,3"}).doc()[0];
  EXPECT_NEAR(j["trace_lower"].get<double>(), 1.0 / 3.0, 1e-8);
  EXPECT_NEAR(j["cm_trace_upper"].get<double>(), 2.0 / 3.0, 1e-12);
}

TEST_F(CliTest, BoundsUsageError) { EXPECT_EQ(run({"bounds", "--modes", "1", "1"}).code, 5); }

TEST_F(CliTest, FamilySweep) {
  const auto r = run({"family", "--k1-max", "2", "--k2-max", "3", "--check"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.doc();
  ASSERT_EQ(j.size(), 6u);
  for (const auto& rec : j) EXPECT_EQ(rec["status"], "Feasible");
}

TEST_F(CliTest, FamilyParallelMatchesSerial) {
  const auto a = run({"family", "--k1-max", "3", "--k2-max", "3", "--check", "--jobs", "1"});
  const auto b = run({"family", "--k1-max", "3", "--k2-max", "3", "--check", "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, ChannelActions) {
  EXPECT_EQ(run({"channel", "loss:0.4", "antidegradable"}).code, 0);
  EXPECT_EQ(run({"channel", "loss:0.6", "antidegradable"}).code, 1);
  const auto eb = run({"--format", "table", "channel", "replacement:1", "eb"});
  EXPECT_EQ(eb.code, 0);
  EXPECT_NE(eb.out.find("entanglement-breaking: true"), std::string::npos);
  EXPECT_EQ(run({"channel", "loss:0.99", "eb"}).code, 1);
  EXPECT_EQ(run({"channel", "identity:1", "k_ext", "--k", "2"}).code, 1);
  EXPECT_EQ(run({"channel", "replacement:1", "k_ext", "--k", "10"}).code, 0);
  EXPECT_EQ(run({"channel", "loss:0.3", "validate"}).code, 0);
}

TEST_F(CliTest, ChannelFileAndChoiOutput) {
  const auto f = write("bad.ch", "n_in 1\nn_out 1\nx_matrix\n1.1 0\n0 1.1\nn_matrix\n0 0\n0 0\n");
  EXPECT_EQ(run({"channel", f, "validate"}).code, 1);
  const auto good = write("loss.ch", "n_in 1\nn_out 1\nx_matrix\n0.5 0\n0 0.5\nn_matrix\n0 0.75\n-0.75 0\n");
  const auto r = run({"channel", good, "choi", "--out", path("choi.cm")});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = fgs::read_cm_document(path("choi.cm"));
  ASSERT_TRUE(doc.split.has_value());
  EXPECT_NEAR(doc.matrix(0, 2), 0.5, 1e-15);
}

TEST_F(CliTest, OracleVerify) {
  const auto r = run({"oracle-verify", "roundtrip", "--n-max", "3", "--trials", "100"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.doc()["passed"].get<bool>());
  EXPECT_LT(r.doc()["max_residual"].get<double>(), 1e-9);
  EXPECT_EQ(run({"oracle-verify", "sandwich", "--n-max", "3", "--trials", "30"}).code, 0);
  EXPECT_EQ(run({"oracle-verify", "wick", "--n-max", "3", "--trials", "3"}).code, 0);
  EXPECT_EQ(run({"oracle-verify", "extension", "--trials", "3"}).code, 0);
  EXPECT_EQ(run({"oracle-verify", "roundtrip", "--n-max", "9"}).code, 5);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 5);
  EXPECT_EQ(run({"frobnicate"}).code, 5);
  EXPECT_EQ(run({"extendible", "family:2,2", "0", "2"}).code, 5);
  EXPECT_EQ(run({"--format", "xml", "check-cm", "vacuum:1"}).code, 5);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST_F(CliTest, DeterministicOutput) {
  const std::vector<std::string> args{"--seed", "7", "extendible", "family:2,2", "3", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(CliTest, ConfigFileAndEnvironment) {
  const auto cfg = write("cfg.json", R"({"output_format": "table", "eps_feas": 1e-6})");
  const auto explicit_run = run({"--config", cfg, "bounds", "--modes", "1", "1", "--k1", "2", "--k2", "2"});
  EXPECT_EQ(explicit_run.out.rfind("k1\tk2", 0), 0u) << explicit_run.out;
  ::setenv(cli::kConfigEnvVar, cfg.c_str(), 1);
  const auto env_run = run({"bounds", "--modes", "1", "1", "--k1", "2", "--k2", "2"});
  EXPECT_EQ(env_run.out, explicit_run.out);
  // Flags win over the file.
  EXPECT_NO_THROW(json::parse(run({"--format", "json", "check-cm", "vacuum:1"}).out));
  const auto bad = write("bad.json", R"({"eps_psd": -1})");
  EXPECT_EQ(run({"--config", bad, "check-cm", "vacuum:1"}).code, 5);
  const auto unknown = write("unknown.json", R"({"tolerance": 1})");
  EXPECT_EQ(run({"--config", unknown, "check-cm", "vacuum:1"}).code, 3);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kParseError), 3);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kNotBonaFide), 2);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kSolverStalled), 4);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kNotCP), 1);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kInvalidParameter), 5);
}

TEST(Config, Defaults) {
  const cli::RunConfig c;
  EXPECT_EQ(c.eps_psd, 1e-9);
  EXPECT_EQ(c.eps_feas, 1e-7);
  EXPECT_EQ(c.max_iters, 20000);
  EXPECT_EQ(c.seed, 0u);
  EXPECT_NO_THROW(c.validate());
}

}  // namespace
}  // namespace fgext
