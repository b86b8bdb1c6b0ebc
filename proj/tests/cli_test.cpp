#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kTool = MATROID_ID_CLI;
const std::string kData = MATROID_ID_TEST_DATA;

int run(const std::string& args) {
  const std::string cmd = "'" + kTool + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("matroid_id_cli_" + std::to_string(::getpid()) + "_" + name);
  std::filesystem::remove(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("enumerate --model cfn --leaves 3"), 1);
  EXPECT_EQ(run("certify --model xyz --leaves 4"), 1);
  EXPECT_EQ(run("certify --model cfn --leaves 4 --mode sz --epsilon 2"), 1);
  EXPECT_EQ(run("certify --model cfn --case '12|34 vs 12|35'"), 1);
  EXPECT_EQ(run("verify"), 1);
}

TEST(Cli, EnumerateSucceeds) { EXPECT_EQ(run("enumerate --model k3p --leaves 5"), 0); }

TEST(Cli, UnseparatedCaseExitsTwo) {
  // these two six-leaf mixtures share a Jacobian matroid up to relabelling
  auto out = scratch("unsolved.jsonl");
  EXPECT_EQ(run("certify --model cfn --mode sz --trials 200 --out '" + out.string() +
                "' --case '12|3456,123|456,1234|56;23|1456,123|456,1236|45 vs "
                "12|3456,123|456,1236|45;23|1456,123|456,1234|56'"),
            2);
  std::filesystem::remove(out);
}

TEST(Cli, CertifyThenVerify) {
  auto out = scratch("k3p.jsonl");
  ASSERT_EQ(run("certify --model k3p --leaves 4 --seed 2 --out '" + out.string() + "'"), 0);
  EXPECT_EQ(run("verify '" + out.string() + "'"), 0);
  std::filesystem::remove(out);
}

TEST(Cli, VerifyRejectsCorruptedRecord) {
  std::string text = slurp(kData + "/k3p_4leaf_golden.jsonl");
  auto pos = text.find("right-independent");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, std::string("right-independent").size(), "left-independent");
  auto out = scratch("corrupt.jsonl");
  std::ofstream(out) << text;
  EXPECT_EQ(run("verify '" + out.string() + "'"), 2);
  std::filesystem::remove(out);
}

TEST(Cli, VerifyRejectsMalformedFile) {
  auto out = scratch("garbage.jsonl");
  std::ofstream(out) << "garbage\n";
  EXPECT_EQ(run("verify '" + out.string() + "'"), 1);
  EXPECT_EQ(run("verify '" + out.string() + ".missing'"), 1);
  std::filesystem::remove(out);
}

TEST(Cli, CompareOverBudgetExitsThree) {
  EXPECT_EQ(run("matroid-compare --model cfn --case 'fig4-left vs fig4-right' --budget 10"), 3);
}
