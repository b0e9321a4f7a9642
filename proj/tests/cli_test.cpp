#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "unimagic/render.hpp"

namespace {

using unimagic::testing::read_fixture;

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string fixture_path(const std::string& name) { return std::string(UNIMAGIC_FIXTURE_DIR) + "/" + name; }

// args are passed to the shell as written
CliResult run(const std::string& args, const std::string& stdin_text = {}) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto err_file = dir / ("unimagic_cli_err_" + std::to_string(::getpid()));
  const auto in_file = dir / ("unimagic_cli_in_" + std::to_string(::getpid()));
  std::ofstream(in_file) << stdin_text;
  const std::string cmd =
      std::string(UNIMAGIC_CLI) + " " + args + " <" + in_file.string() + " 2>" + err_file.string();
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::stringstream err;
  err << std::ifstream(err_file).rdbuf();
  r.err = err.str();
  std::filesystem::remove(err_file);
  std::filesystem::remove(in_file);
  return r;
}

TEST(Cli, VerifyFiveByFive) {
  const CliResult r = run("verify --expect magic --constant 176 " + fixture_path("combination_5x5.sq"));
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("category: PandiagonalMagic"), std::string::npos);
  EXPECT_NE(r.out.find("constant: 176"), std::string::npos);
  EXPECT_NE(r.out.find("ExactProduct {0,1,2,5,8}"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, VerifyWrongConstantFails) {
  const CliResult r = run("verify --expect magic --constant 88 " + fixture_path("combination_5x5.sq"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("expected constant 88"), std::string::npos);
}

TEST(Cli, VerifySemiMagicIsNotMagic) {
  EXPECT_EQ(run("verify --expect magic " + fixture_path("palindromic_888.sq")).status, 1);
  EXPECT_EQ(run("verify --expect semi --constant 888 " + fixture_path("palindromic_888.sq")).status, 0);
}

TEST(Cli, ClassifyAllVerdicts) {
  const CliResult r = run("classify --transforms rot180,mirror-h,mirror-v,digit-reverse " +
                    fixture_path("combination_4x4_1258.sq"));
  EXPECT_EQ(r.status, 0) << r.err;
  for (const char* name : {"rot180", "mirror-h", "mirror-v", "digit-reverse"}) {
    EXPECT_NE(r.out.find(std::string(name) + ": ImageMagicSameConstant 176"), std::string::npos) << name;
  }
}

TEST(Cli, ClassifyExpectChecksImages) {
  EXPECT_EQ(run("classify --expect magic " + fixture_path("combination_4x4_0125.sq")).status, 0);
  EXPECT_EQ(run("classify --expect semi " + fixture_path("palindromic_1221.sq")).status, 0);
  // the mirror image of a square holding 3 is undefined
  EXPECT_EQ(run("classify --expect semi --transforms mirror-h", "3 4\n4 3\n").status, 1);
}

TEST(Cli, ClassifyJson) {
  const CliResult r = run("classify --style json " + fixture_path("combination_4x4_0125.sq"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"constant\": 88"), std::string::npos);
  EXPECT_NE(r.out.find("\"ImageMagicSameConstant\""), std::string::npos);
}

TEST(Cli, DoubleRotationIsIdentity) {
  for (const char* name : {"combination_5x5.sq", "palindromic_1221.sq"}) {
    const CliResult twice = run(std::string("transform --apply rot180 --apply rot180 ") + fixture_path(name));
    EXPECT_EQ(twice.status, 0);
    EXPECT_EQ(unimagic::parse_square(twice.out), unimagic::testing::fixture(name));
  }
}

TEST(Cli, TransformInvalidDigit) {
  const CliResult r = run("transform --apply rot180", "12 34\n43 21\n");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("rot180"), std::string::npos);
}

TEST(Cli, TransformReadsStdin) {
  const CliResult r = run("transform --apply digit-reverse -", "12 21\n21 12\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "21 12\n12 21\n");
}

TEST(Cli, RenderPlainRoundTrip) {
  for (const char* name : {"combination_5x5.sq", "combination_4x4_1258.sq", "combination_4x4_0125.sq",
                           "palindromic_888.sq", "palindromic_1221.sq"}) {
    const CliResult r = run(std::string("render --style plain ") + fixture_path(name));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(unimagic::parse_square(r.out), unimagic::testing::fixture(name)) << name;
  }
}

TEST(Cli, RenderBorderedGolden) {
  const CliResult r = run("render --style bordered --border-label 88+88 " + fixture_path("combination_5x5.sq"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, read_fixture("bordered_5x5_8888.txt"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("verify --expect sideways " + fixture_path("combination_5x5.sq")).status, 2);
  EXPECT_EQ(run("verify /no/such/file.sq").status, 2);
  EXPECT_EQ(run("transform --apply spin", "11\n").status, 2);
  EXPECT_EQ(run("search --alphabet 125 --order 4").status, 2);
  EXPECT_EQ(run("dates --alphabet 0125 --from 31.02.2010 --to 01.03.2010").status, 2);
  EXPECT_EQ(run("render --style fancy", "11\n").status, 2);
}

TEST(Cli, ParseErrorsNameThePosition) {
  const CliResult r = run("verify", "12 21\n21 x2\n");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, SearchCountsAndJobs) {
  const CliResult one = run("search --alphabet 1258 --transforms all");
  const CliResult two = run("search --alphabet 1258 --transforms all --jobs 3");
  EXPECT_EQ(one.status, 0);
  EXPECT_EQ(one.out, two.out);
  // dedup may keep another member of its orbit, so look in the full list
  EXPECT_NE(one.out.find(unimagic::render_plain(unimagic::testing::combination_4x4_1258())), std::string::npos);
  EXPECT_EQ(run("search --alphabet 1258 --transforms all --dedup --count").out, "144\n");
}

TEST(Cli, SearchJsonLines) {
  const CliResult r = run("search --alphabet 125 --expect semi --style json");
  EXPECT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) EXPECT_EQ(line.front(), '{');
  EXPECT_EQ(std::to_string(n) + "\n", run("search --alphabet 125 --expect semi --count").out);
}

TEST(Cli, Palindromes) {
  const CliResult r = run("palindromes --alphabet 125 --order 3 --width 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find(unimagic::render_plain(unimagic::testing::palindromic_888())), std::string::npos);
}

TEST(Cli, Dates) {
  const CliResult exact = run("dates --alphabet 01258 --from 01.01.2010 --to 31.12.2010 --mode exact");
  EXPECT_EQ(exact.status, 0);
  EXPECT_EQ(exact.out, "08.05.2010\n18.05.2010\n28.05.2010\n05.08.2010\n15.08.2010\n25.08.2010\n");
  const CliResult json = run("dates --alphabet 0125 --from 01.05.2010 --to 10.05.2010 --style json");
  EXPECT_EQ(json.out, "[\"01.05.2010\",\"02.05.2010\",\"05.05.2010\",\"10.05.2010\"]\n");
  EXPECT_EQ(run("dates --alphabet 015 --from 01.05.2010 --to 31.05.2010").out, "");
}

}  // namespace
