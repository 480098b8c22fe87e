#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "coocc/synthetic.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "coocc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = coocc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(COOCC_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("coocc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string panel() const {
    const auto p = path("panel.csv");
    if (!fs::exists(p)) std::ofstream(p) << coocc::to_csv(coocc::synthetic_panel());
    return p;
  }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ValidatePrintsShape) {
  auto r = run({"validate", data("tiny_2x2x1.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k=2 n=2 l=1 missing=0\n");
  r = run({"validate", data("panel_missing.csv")});
  EXPECT_EQ(r.out, "k=4 n=5 l=2 missing=2\n");
}

TEST_F(CliTest, DataErrorsExitThree) {
  auto r = run({"validate", data("bad_value.csv")});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("error: BadValue:", 0), 0u);
  r = run({"validate", data("duplicate.csv")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("DuplicateCell"), std::string::npos);
  r = run({"validate", path("absent.csv")});
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"beta", data("panel_4x5x2.csv"), "--link", "cauchit"}).code, 2);
  EXPECT_EQ(run({"classic", data("panel_4x5x2.csv"), "--pair", "s1"}).code, 2);
}

TEST_F(CliTest, NumericalErrorsExitFour) {
  const auto r = run({"bayes", "--k", "2", "--N", "20", "--mA", "3", "--mB", "3"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.err.rfind("error: TooLarge:", 0), 0u);
}

TEST_F(CliTest, AlphaOnCentralPair) {
  const auto r = run({"alpha", data("pair_20_10_10_5.csv"), "--pair", "A,B", "--period", "t1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto pos = r.out.find("alpha_hat=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(r.out.substr(pos + 10)), 0.0, 1e-9);
  EXPECT_NE(r.out.find("N=20 mA=10 mB=10 X=5"), std::string::npos);
}

TEST_F(CliTest, ClassicIndices) {
  auto r = run({"classic", data("panel_4x5x2.csv"), "--pair", "s1,s2", "--period", "y1"});
  EXPECT_EQ(r.out, "period=y1 jaccard=0.2\n");
  r = run({"classic", data("panel_4x5x2.csv"), "--pair", "s1,s2", "--index", "dice"});
  EXPECT_EQ(r.out, "period=y1 dice=0.333333333333\nperiod=y2 dice=0.333333333333\n");
  r = run({"classic", data("panel_4x5x2.csv"), "--pair", "s1,nope"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("UnknownIdentifier"), std::string::npos);
}

TEST_F(CliTest, BetaReportIsByteIdenticalOnRerun) {
  const auto a = path("a.json"), b = path("b.json");
  const std::vector<std::string> common{"beta", panel(), "--link", "both", "--randomize", "20", "--seed", "11"};
  auto args = common;
  args.insert(args.end(), {"--out", a, "--pairwise", "--log", path("a.log")});
  ASSERT_EQ(run(args).code, 0);
  args = common;
  args.insert(args.end(), {"--out", b, "--pairwise", "--log", path("b.log")});
  ASSERT_EQ(run(args).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(path("a.log")), slurp(path("b.log")));

  const auto j = nlohmann::json::parse(slurp(a));
  for (const char* key : {"meta", "per_unit", "pairwise", "diagnostics"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto& prov = j["meta"]["provenance"];
  EXPECT_EQ(prov["seed"], 11);
  EXPECT_EQ(prov["config"]["link"], "both");
  EXPECT_EQ(prov["input"]["sha256"].get<std::string>().size(), 64u);
  ASSERT_EQ(j["per_unit"].size(), 16u);
  for (const auto& row : j["per_unit"]) {
    for (const char* key : {"beta_logit", "beta_logit_randomized", "beta_probit", "beta_probit_randomized"}) {
      ASSERT_TRUE(row.contains(key)) << key;
      EXPECT_LE(row[key].get<double>(), 1.0);
    }
  }
  const auto& sim = j["pairwise"]["similarity"]["values"];
  ASSERT_EQ(sim.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(sim[i][i].get<double>(), 1.0);
    for (std::size_t c = 0; c < 16; ++c) EXPECT_EQ(sim[i][c], sim[c][i]);
  }
}

TEST_F(CliTest, ConfigFileYieldsToFlags) {
  const auto cfg = path("run.cfg");
  std::ofstream(cfg) << "# defaults for this run\nlink=probit\nseed=5\nrandomize=3\n";
  const auto r = run({"beta", data("panel_4x5x2.csv"), "--config", cfg, "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["meta"]["provenance"]["config"]["link"], "probit");
  EXPECT_EQ(j["meta"]["provenance"]["config"]["randomize"], 3);
  EXPECT_EQ(j["meta"]["provenance"]["seed"], 9);

  std::ofstream(path("bad.cfg")) << "no-such-option=1\n";
  EXPECT_EQ(run({"beta", data("panel_4x5x2.csv"), "--config", path("bad.cfg")}).code, 2);
  EXPECT_EQ(run({"beta", data("panel_4x5x2.csv"), "--config", path("missing.cfg")}).code, 2);
}

TEST_F(CliTest, HeatmapWritesSvg) {
  const auto out = path("heat.svg");
  auto r = run({"heatmap", data("panel_4x5x2.csv"), "--axis", "entity", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto svg = slurp(out);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("Diverging scale"), std::string::npos);
  EXPECT_EQ(svg.find("<script"), std::string::npos);
  EXPECT_NE(svg.find("s1 / s1: 1</title>"), std::string::npos);
  r = run({"heatmap", data("panel_4x5x2.csv"), "--axis", "unit", "--period", "y2", "--out", out});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(slurp(out).find("u3 / u3: 1</title>"), std::string::npos);
}

TEST_F(CliTest, ImputeCheckIsDeterministic) {
  const auto a = path("a.csv"), b = path("b.csv");
  auto ra = run({"impute-check", panel(), "--missing-frac", "0.02", "--reps", "4", "--seed", "3", "--out", a});
  auto rb = run({"impute-check", panel(), "--missing-frac", "0.02", "--reps", "4", "--seed", "3", "--out", b});
  ASSERT_EQ(ra.code, 0) << ra.err;
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(ra.out, rb.out);
  EXPECT_EQ(slurp(a).rfind("repetition,unit,period,full,imputed\n", 0), 0u);
  EXPECT_NE(ra.out.find("mean_correlation="), std::string::npos);
}

TEST_F(CliTest, BayesPrintsAndWritesReport) {
  auto r = run({"bayes", "--prior", "uniform", "--k", "1", "--N", "2", "--mA", "1", "--mB", "1", "--grid", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("prior=uniform upper=0.1 likelihood=0.5", 0), 0u);
  const auto out = path("bayes.json");
  r = run({"bayes", "--prior", "truncnormal", "--k", "3", "--N", "6", "--mA", "3", "--mB", "3", "--grid", "1",
           "--order", "16", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_GT(j["diagnostics"]["result"]["mu1"].get<double>(), j["diagnostics"]["result"]["mu2"].get<double>());
  EXPECT_EQ(j["diagnostics"]["grid_values"].size(), 49u);
}

TEST_F(CliTest, CompareTableWithCovariates) {
  const auto out = path("table.csv");
  const auto r = run({"compare", data("panel_4x5x2.csv"), "--covariates", data("covariates.csv"), "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream table(slurp(out));
  std::string line;
  std::getline(table, line);
  EXPECT_EQ(line, "unit,prevalence,jaccard,beta_logit,beta_probit,area,elevation");
  std::getline(table, line);
  EXPECT_EQ(line.rfind("u0,", 0), 0u);
  EXPECT_EQ(line.substr(line.size() - 7), ",1.5,10");
  int rows = 1;
  while (std::getline(table, line)) {
    ++rows;
    if (line.rfind("u4,", 0) == 0) EXPECT_EQ(line.substr(line.size() - 2), ",,");
  }
  EXPECT_EQ(rows, 5);
}
