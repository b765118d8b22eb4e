#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using sigmavote::cli::run;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sigmavote_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  static std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char* kFive =
    "# candidates: A,B,C,D,E\n# seats: 2\nweight,ranking\n"
    "5,A>B>C\n4,C>A>E>D\n3,B>C\n2,E>D>A\n2,D\n1,\n";

}  // namespace

TEST_F(CliTest, AnalyzeWritesReportAndRankings) {
  const auto in = write("ward.csv", kFive);
  const auto report = dir_ / "out" / "ward.csv";
  ASSERT_EQ(call({"analyze", in.string(), "-o", report.string(), "--graph", (dir_ / "g.csv").string()}), 0) << err_.str();
  const std::string csv = slurp(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "election_id,rule,sigma_iia,sigma_u,m_value,n,m,seats");
  EXPECT_EQ(lines(csv), 6u);
  EXPECT_NE(csv.find("ward,stv,"), std::string::npos);
  EXPECT_EQ(lines(slurp(dir_ / "out" / "ward_rankings.csv")), 1u + 5 * 5);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "ward.csv.manifest.json"));
  EXPECT_EQ(slurp(dir_ / "g.csv").substr(0, 15), "from,to,weight\n");
  EXPECT_NE(out_.str().find("sigma_IIA"), std::string::npos);
}

TEST_F(CliTest, AnalyzeJson) {
  const auto in = write("ward.csv", kFive);
  const auto report = dir_ / "r.json";
  ASSERT_EQ(call({"--format", "json", "--rules", "borda,optimal-u", "analyze", in.string(), "-o", report.string()}), 0);
  auto j = nlohmann::json::parse(slurp(report));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["rule"], "optimal-u");
  EXPECT_EQ(j[0]["per_candidate_swaps"].size(), 5u);
  EXPECT_EQ(j[0]["ranking"].size(), 5u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(call({"analyze", (dir_ / "missing.csv").string()}), 2);
  const auto bad = write("bad.csv", "# candidates: A,B\nweight,ranking\n1,A>A\n");
  EXPECT_EQ(call({"analyze", bad.string()}), 2);
  EXPECT_NE(err_.str().find("bad.csv:3:"), std::string::npos) << err_.str();
  const auto in = write("ward.csv", kFive);
  EXPECT_EQ(call({"--rules", "kemeny", "analyze", in.string()}), 3);
  EXPECT_EQ(call({"--rules", "stv:k=5", "analyze", in.string()}), 3);
  EXPECT_EQ(call({"analyze", in.string(), "--seats", "0"}), 3);
  EXPECT_EQ(call({"--jobs", "0", "analyze", in.string()}), 3);
  EXPECT_EQ(call({"analyze", in.string(), "--no-such-flag"}), 3);
  EXPECT_EQ(call({}), 3);
  EXPECT_EQ(call({"--help"}), 0);
}

TEST_F(CliTest, SweepIsolatesFailures) {
  write("corpus/a.csv", kFive);
  write("corpus/sub/b.csv", kFive);
  write("corpus/broken.csv", "# candidates: A\nnot a header\n");
  const auto report = dir_ / "sweep.csv";
  const auto summary = dir_ / "summary.csv";
  ASSERT_EQ(call({"--jobs", "2", "sweep", (dir_ / "corpus").string(), "-o", report.string(), "--summary",
                  summary.string()}),
            0);
  const std::string csv = slurp(report);
  EXPECT_EQ(lines(csv), 11u);
  EXPECT_NE(csv.find("\na,2-approval,"), std::string::npos);
  EXPECT_NE(csv.find("\nsub/b,stv,"), std::string::npos);
  EXPECT_NE(err_.str().find("skipped broken"), std::string::npos);
  EXPECT_NE(err_.str().find("3 files, 2 evaluated, 1 failed, 10 rows"), std::string::npos);
  EXPECT_GT(lines(slurp(summary)), 1u);
}

TEST_F(CliTest, SweepEmptyCorpus) {
  fs::create_directories(dir_ / "empty");
  EXPECT_EQ(call({"sweep", (dir_ / "empty").string()}), 4);
  write("bad/x.csv", "garbage\n");
  EXPECT_EQ(call({"sweep", (dir_ / "bad").string()}), 4);
  EXPECT_EQ(call({"sweep", (dir_ / "nowhere").string()}), 2);
}

TEST_F(CliTest, GenerateIsReproducible) {
  const std::vector<std::string> base = {"--seed", "7", "--rules", "borda,plurality,stv", "generate", "--alpha", "2",
                                         "-m", "5", "--voters", "50", "--profiles", "3", "--out-dir"};
  auto args = base;
  args.push_back((dir_ / "g1").string());
  ASSERT_EQ(call(args), 0) << err_.str();
  args.back() = (dir_ / "g2").string();
  ASSERT_EQ(call(args), 0);
  for (const auto* name : {"profile_0000.csv", "profile_0002.csv", "experiment.csv", "config.json"}) {
    EXPECT_EQ(slurp(dir_ / "g1" / name), slurp(dir_ / "g2" / name)) << name;
  }
  EXPECT_EQ(lines(slurp(dir_ / "g1" / "experiment.csv")), 1u + 3 * 3);
  auto cfg = nlohmann::json::parse(slurp(dir_ / "g1" / "config.json"));
  EXPECT_EQ(cfg["strength_draws"].size(), 3u);
  EXPECT_EQ(call({"generate", "--alpha", "-1", "--out-dir", (dir_ / "g3").string()}), 3);
  EXPECT_EQ(call({"generate", "--seats", "9", "-m", "4", "--out-dir", (dir_ / "g3").string()}), 3);
}

TEST_F(CliTest, BtExperimentToStdout) {
  ASSERT_EQ(call({"--rules", "borda", "bt-experiment", "-m", "4", "--voters", "20", "--profiles", "2"}), 0);
  EXPECT_EQ(out_.str().substr(0, out_.str().find('\n')), "replicate,rule,sigma_iia,sigma_u,alpha,m");
  EXPECT_EQ(lines(out_.str()), 3u);
}

TEST_F(CliTest, BootstrapCsv) {
  const auto in = write("ward.csv", kFive);
  const auto a = dir_ / "a.csv";
  const auto b = dir_ / "b.csv";
  ASSERT_EQ(call({"--seed", "3", "--rules", "borda,stv", "bootstrap", in.string(), "-B", "50", "-o", a.string()}), 0);
  ASSERT_EQ(call({"--seed", "3", "--rules", "borda,stv", "bootstrap", in.string(), "-B", "50", "-o", b.string()}), 0);
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text.substr(0, text.find('\n')), "election_id,rule,metric,mean,lo,hi,B,confidence");
  EXPECT_EQ(lines(text), 5u);
  EXPECT_EQ(call({"bootstrap", in.string(), "--confidence", "1.5"}), 3);
  EXPECT_EQ(call({"bootstrap", in.string(), "--metrics", "sigma_z"}), 3);
}
