#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dynproof/demo.hpp"
#include "dynproof/dimacs.hpp"
#include "dynproof/dsr.hpp"
#include "dynproof/text_format.hpp"

using namespace dynproof;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("dynproof-cli-" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // stdout and stderr together.
  CliRun run(const std::string& args) {
    const fs::path out = dir_ / "out.txt";
    const std::string cmd = std::string("\"") + DYNPROOF_BIN + "\" " + args + " > \"" +
                            out.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    return r;
  }

  fs::path dir_;
};

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_F(Cli, DemoRhoAcceptedNaiveRejected) {
  ASSERT_EQ(run("demo compose -n 3 -o " + q(dir_ / "demo")).code, 0);
  const auto d = dir_ / "demo";
  for (const char* name : {"G.cnf", "rho.term", "naive-concat.dsr", "G_1.cnf", "pi_3.dsr"})
    EXPECT_TRUE(fs::exists(d / name)) << name;
  EXPECT_EQ(run("check --cnf " + q(d / "G.cnf") + " --proof " + q(d / "rho.term")).code, 0);
  const auto naive = run("check-dsr --cnf " + q(d / "G.cnf") + " --proof " + q(d / "naive-concat.dsr"));
  EXPECT_EQ(naive.code, 1);
  EXPECT_NE(naive.out.find("(sr "), std::string::npos) << naive.out;
  for (int i = 1; i <= 3; ++i) {
    const auto part = "G_" + std::to_string(i) + ".cnf";
    const auto pi = "pi_" + std::to_string(i) + ".dsr";
    EXPECT_EQ(run("check-dsr --cnf " + q(d / part) + " --proof " + q(d / pi)).code, 0);
  }
}

TEST_F(Cli, DemoMatchesBundledCopy) {
  ASSERT_EQ(run("demo compose -n 3 -o " + q(dir_)).code, 0);
  for (const auto& e : fs::directory_iterator(fs::path(CORPUS_DIR) / "demo"))
    EXPECT_EQ(slurp(dir_ / e.path().filename()), slurp(e.path())) << e.path();
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("check --cnf " + q(dir_ / "missing.cnf") + " --proof x").code, 2);
  EXPECT_EQ(run("demo compose -n 0 -o " + q(dir_)).code, 2);
  EXPECT_EQ(run("oracle --cnf x --max-vars 31").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, ParseErrorsNameTheLine) {
  spit(dir_ / "bad.cnf", "p cnf 2 1\n1 x 0\n");
  spit(dir_ / "p.dsr", "0\n");
  const auto r = run("check-dsr --cnf " + q(dir_ / "bad.cnf") + " --proof " + q(dir_ / "p.dsr"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
}

TEST_F(Cli, CheckDsrVerdicts) {
  spit(dir_ / "f.cnf", "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
  spit(dir_ / "ok.dsr", "1 0\n0\n");
  spit(dir_ / "bad.dsr", "1 0\n2 0 w 1 t 0\n");
  spit(dir_ / "partial.dsr", "c nothing yet\n");
  const auto f = q(dir_ / "f.cnf");
  EXPECT_EQ(run("check-dsr --cnf " + f + " --proof " + q(dir_ / "ok.dsr") + " --refutation").code, 0);
  EXPECT_EQ(run("check-dsr --cnf " + f + " --proof " + q(dir_ / "partial.dsr")).code, 0);
  EXPECT_EQ(run("check-dsr --cnf " + f + " --proof " + q(dir_ / "partial.dsr") + " --refutation").code, 1);
  EXPECT_EQ(run("check-dsr --cnf " + f + " --proof " + q(dir_ / "ok.dsr") + " --sr-variant paper").code, 0);
  EXPECT_EQ(run("check-dsr --cnf " + f + " --proof " + q(dir_ / "ok.dsr") + " --sr-variant odd").code, 2);
}

TEST_F(Cli, BudgetExceededIsAnError) {
  std::string ctx;
  for (int i = 0; i < 12; ++i) ctx += " (choice (seq) (seq))";
  spit(dir_ / "impl.txt", "(implies ((or 1)) (dyn (seq" + ctx + ") (or 1)))");
  const auto r = run("implies --file " + q(dir_ / "impl.txt") + " --budget 100");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("budget"), std::string::npos) << r.out;
  EXPECT_EQ(run("implies --file " + q(dir_ / "impl.txt")).code, 0);
}

TEST_F(Cli, ImpliesReportsFailingLeaf) {
  spit(dir_ / "impl.txt", "(implies ((or 1 2)) (or 1))");
  const auto r = run("implies --file " + q(dir_ / "impl.txt") + " --trace");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("=> 1 0"), std::string::npos) << r.out;
}

TEST_F(Cli, OracleVerdicts) {
  spit(dir_ / "sat.cnf", "p cnf 2 1\n1 2 0\n");
  spit(dir_ / "goal.txt", "(or 1 2)\n(dyn (seq (test (or -1))) (or 2))\n");
  EXPECT_EQ(run("oracle --cnf " + q(dir_ / "sat.cnf")).code, 1);
  EXPECT_EQ(run("oracle --cnf " + q(dir_ / "sat.cnf") + " --goal " + q(dir_ / "goal.txt")).code, 0);
  std::string wide = "p cnf 25 1\n";
  for (int v = 1; v <= 25; ++v) wide += std::to_string(v) + " ";
  spit(dir_ / "wide.cnf", wide + "0\n");
  EXPECT_EQ(run("oracle --cnf " + q(dir_ / "wide.cnf")).code, 2);
  EXPECT_EQ(run("oracle --cnf " + q(dir_ / "wide.cnf") + " --max-vars 25").code, 1);
}

TEST_F(Cli, TranslateMatchesInProcess) {
  const fs::path base = fs::path(CORPUS_DIR) / "sym-sr-1";
  const auto cnf = base.string() + ".cnf";
  const auto dsr = base.string() + ".dsr";
  ASSERT_EQ(run("translate --cnf " + q(cnf) + " --proof " + q(dsr) + " -o " + q(dir_ / "t.term")).code, 0);
  const auto expected = to_text(translate(parse_dimacs(slurp(cnf)).formula, parse_dsr(slurp(dsr))));
  EXPECT_EQ(slurp(dir_ / "t.term"), expected);
  const auto piped = run("translate --cnf " + q(cnf) + " --proof " + q(dsr) + " -o -");
  EXPECT_EQ(piped.code, 0);
  EXPECT_EQ(piped.out, expected);
}

TEST_F(Cli, CheckRejectionNamesPathAndGoal) {
  spit(dir_ / "f.cnf", "p cnf 2 1\n1 2 0\n");
  spit(dir_ / "p.term", "(elim\n(qed))\n");
  const auto r = run("check --cnf " + q(dir_ / "f.cnf") + " --proof " + q(dir_ / "p.term"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("instruction path: 0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("goal:"), std::string::npos) << r.out;
}

TEST_F(Cli, ExitCodesOverCorpus) {
  int seen = 0;
  for (const auto& e : fs::directory_iterator(CORPUS_DIR)) {
    if (e.path().extension() != ".cnf") continue;
    auto base = e.path();
    base.replace_extension();
    const auto cnf = q(e.path());
    EXPECT_EQ(run("check-dsr --refutation --cnf " + cnf + " --proof " + q(base.string() + ".dsr")).code, 0)
        << base;
    EXPECT_EQ(run("check --cnf " + cnf + " --proof " + q(base.string() + ".term")).code, 0) << base;
    EXPECT_EQ(run("oracle --cnf " + cnf).code, 0) << base;
    ++seen;
  }
  EXPECT_GE(seen, 20);
}
