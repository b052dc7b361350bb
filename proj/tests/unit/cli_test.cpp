#include "caterase/cli.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace caterase::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

constexpr const char* kHeader =
    "x_exp_minus_beta_omega,dSs,Qe,Ise,gamma_H,gamma_E,dI,best_dv,t,coherence_diag";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("caterase_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

TEST_F(CliTest, SweepWritesHeaderAndDefaultGrid) {
  const std::string csv = path("sweep.csv");
  ASSERT_EQ(call({"jc-sweep", "--out", csv, "--deterministic"}), kOk) << err_.str();
  const auto lines = lines_of(slurp(csv));
  ASSERT_EQ(lines.size(), 26u);
  EXPECT_EQ(lines[0], kHeader);
  EXPECT_EQ(lines[1].rfind("0.05,", 0), 0u);
  EXPECT_EQ(lines[25].rfind("0.65,", 0), 0u);
  EXPECT_NE(out_.str().find("25 rows"), std::string::npos);

  const Json summary = Json::parse(slurp(path("sweep.json")));
  EXPECT_EQ(summary["tuple"], Json::array({2, 1, 1, 2}));
  EXPECT_EQ(summary["rows"].size(), 25u);
  EXPECT_FALSE(summary.contains("generated"));
  EXPECT_GT(summary["peak"]["gamma_H"].get<double>(), 0.15);
  EXPECT_TRUE(summary["rows"][0].contains("all_witnesses"));
}

TEST_F(CliTest, DeterministicSweepIsByteIdentical) {
  const std::vector<std::string> common{"--grid", "0.2:0.5:4", "--deterministic",
                                        "--no-witness-scan"};
  auto args = [&](const std::string& out) {
    std::vector<std::string> a{"jc-sweep", "--out", out};
    a.insert(a.end(), common.begin(), common.end());
    return a;
  };
  ASSERT_EQ(call(args(path("a.csv"))), kOk);
  ASSERT_EQ(call(args(path("b.csv"))), kOk);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(CliTest, TimestampedSweepStartsWithComment) {
  ASSERT_EQ(call({"jc-sweep", "--out", path("t.csv"), "--grid", "0.3:0.3:1",
                  "--no-witness-scan"}),
            kOk);
  const auto lines = lines_of(slurp(path("t.csv")));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].rfind("# generated ", 0), 0u);
  EXPECT_EQ(lines[1], kHeader);
  EXPECT_TRUE(Json::parse(slurp(path("t.json"))).contains("generated"));
}

TEST_F(CliTest, SweepConfigFile) {
  const std::string cfg = write("c.json", R"({"x": [0.25, 0.4], "dv_min": 3, "dv_max": 5,
      "t_policy": "fixed:1.2", "deterministic": true, "scan_all_witnesses": false,
      "out": ")" + path("cfg.csv") + R"("})");
  ASSERT_EQ(call({"jc-sweep", "--config", cfg}), kOk) << err_.str();
  const auto lines = lines_of(slurp(path("cfg.csv")));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_NE(lines[1].find(",1.2,"), std::string::npos) << lines[1];
  // The command line wins over the config.
  ASSERT_EQ(call({"jc-sweep", "--config", cfg, "--out", path("cli.csv")}), kOk);
  EXPECT_TRUE(fs::exists(path("cli.csv")));
}

TEST_F(CliTest, SweepConfigErrorsExitTwo) {
  EXPECT_EQ(call({"jc-sweep", "--out", path("e.csv"), "--grid", "0.1:0.5:0"}), kConfigError);
  EXPECT_FALSE(fs::exists(path("e.csv")));
  EXPECT_NE(err_.str().find("empty grid"), std::string::npos);
  EXPECT_EQ(call({"jc-sweep", "--grid", "0.1:1.5:3", "--out", path("e.csv")}), kConfigError);
  EXPECT_EQ(call({"jc-sweep", "--grid", "nonsense"}), kConfigError);
  EXPECT_EQ(call({"jc-sweep", "--dv-min", "2"}), kConfigError);
  EXPECT_EQ(call({"jc-sweep", "--t-policy", "sometimes"}), kConfigError);
  EXPECT_EQ(call({"jc-sweep", "--config", write("bad.json", R"({"colour": 1})")}), kConfigError);
  EXPECT_NE(err_.str().find("colour"), std::string::npos);
  EXPECT_EQ(call({"jc-sweep", "--config", write("broken.json", "{")}), kConfigError);
  EXPECT_EQ(call({"jc-sweep", "--bogus"}), kConfigError);
  EXPECT_EQ(call({}), kConfigError);
  EXPECT_FALSE(fs::exists(path("e.csv")));
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(call({"--help"}), kOk); }

TEST_F(CliTest, CatalyzeProductState) {
  const std::string f = write("p.txt", "dims 2 2\n0.12 0.28\n0.18 0.42\n");
  ASSERT_EQ(call({"catalyze", f}), kOk) << err_.str();
  const Json j = Json::parse(out_.str());
  EXPECT_EQ(j["message"], "uncorrelated, no catalytic gain possible");
  EXPECT_TRUE(j["chosen"].is_null());
  EXPECT_TRUE(j["witnesses"].empty());
}

TEST_F(CliTest, CatalyzeQubitQutrit) {
  const std::string f = write("q.txt",
                              "# qubit x qutrit\n"
                              "dims 2 3\n"
                              "0.10 0.20 0.05\n"
                              "0.35 0.15 0.15   # excited row\n");
  ASSERT_EQ(call({"catalyze", f, "--objective", "heat", "--dv-max", "6"}), kOk) << err_.str();
  const Json j = Json::parse(out_.str());
  EXPECT_EQ(j["chosen"]["tuple"], Json::array({2, 1, 1, 2}));
  EXPECT_LE(j["chosen"]["d_v"].get<int>(), 6);
  EXPECT_LT(j["dQe"].get<double>(), 0.0);
  EXPECT_LT(j["dSe"].get<double>(), 0.0);
  EXPECT_TRUE(j["env_majorizes"].get<bool>());

  ASSERT_EQ(call({"catalyze", f, "--greedy", "--out", path("g.json")}), kOk);
  const Json g = Json::parse(slurp(path("g.json")));
  EXPECT_EQ(g["witnesses"].size(), 6u);  // all found; only one is scanned
  EXPECT_EQ(g["candidates"].get<int>(), 8);
}

TEST_F(CliTest, CatalyzeMalformedFileReportsLine) {
  const std::string f = write("m.txt", "dims 2 2\n0.25 0.25\n0.25 abc\n");
  EXPECT_EQ(call({"catalyze", f}), kInputError);
  EXPECT_NE(err_.str().find("m.txt:3:"), std::string::npos) << err_.str();
  EXPECT_EQ(call({"catalyze", write("n.txt", "dims 2 2\n0.5 0.5 0.5 0.5\n")}), kInputError);
  EXPECT_EQ(call({"catalyze", write("d.txt", "0.5 0.5\n")}), kInputError);
  EXPECT_EQ(call({"catalyze", path("missing.txt")}), kInputError);
  EXPECT_EQ(call({"catalyze", write("z.txt", "dims 2 2\n0.5 0 0 0.5\n")}), kInputError);
}

TEST_F(CliTest, CheckErasureHalfTemperature) {
  // Qubit ratio e^0.7 against four uniform levels at beta = 1.4.
  std::ostringstream ps, pe;
  ps.precision(17);
  pe.precision(17);
  const double r = std::exp(0.7);
  ps << r / (1 + r) << "\n" << 1 / (1 + r) << "\n";
  double z = 0.0;
  for (int n = 0; n < 4; ++n) z += std::exp(-1.4 * n);
  for (int n = 0; n < 4; ++n) pe << std::exp(-1.4 * n) / z << " ";
  ASSERT_EQ(call({"check-erasure", write("ps", ps.str()), write("pe", pe.str()), "--omega", "1"}),
            kOk)
      << err_.str();
  const Json j = Json::parse(out_.str());
  EXPECT_EQ(j["condition"], "i");
  EXPECT_NEAR(j["gamma"].get<double>(), 0.5, 1e-10);
  EXPECT_NEAR(j["beta_e"].get<double>(), 1.4, 1e-10);
  EXPECT_NEAR(j["achieved_heat"].get<double>(), j["min_heat"].get<double>(), 1e-10);
  EXPECT_EQ(j["verdict"], "block sorting reaches maximum erasure with a product output");
}

TEST_F(CliTest, CheckErasureGenericAndQubitPair) {
  ASSERT_EQ(call({"check-erasure", write("ps", "0.6 0.4"), write("pe", "0.5 0.3 0.15 0.05")}),
            kOk);
  Json j = Json::parse(out_.str());
  EXPECT_EQ(j["condition"], "none");
  EXPECT_TRUE(j["sigma_s"].is_null());
  EXPECT_TRUE(j["min_heat"].is_number());
  EXPECT_EQ(j["ladder"]["source"], "modular");

  ASSERT_EQ(call({"check-erasure", write("ps2", "0.6 0.4"), write("pe2", "0.8 0.2")}), kOk);
  j = Json::parse(out_.str());
  EXPECT_EQ(j["verdict"], "swap optimal, no catalytic gain");

  EXPECT_EQ(call({"check-erasure", write("ps3", "0.6 0.5"), write("pe3", "0.8 0.2")}),
            kInputError);
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3), "0.333333333333");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-1.0 / 0.0), "-inf");
}

TEST(ParseState, CommentsAndLineNumbers) {
  std::istringstream ok("# header\n\ndims 2 2 # inline\n0.1 0.2\n0.3\n0.4\n");
  const JointState j = parse_state(ok, "mem");
  EXPECT_NEAR(j.population(1, 1), 0.4, 1e-15);
  std::istringstream extra("dims 2 2\n0.1 0.2 0.3 0.4\n0.0\n");
  try {
    parse_state(extra, "mem");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream neg("dims 2 2\n0.1 -0.2 0.3 0.4\n");
  EXPECT_THROW(parse_state(neg, "mem"), ParseError);
}

}  // namespace
}  // namespace caterase::cli
