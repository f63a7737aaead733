#include "oa/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oa/construct.hpp"
#include "oa/io.hpp"

namespace oa {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "oaenum");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("oaenum_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Design& design, int d) {
    const auto path = (dir_ / name).string();
    std::ofstream f(path);
    io::write_array(f, design, d);
    return path;
  }

  fs::path dir_;
};

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "--d", "2", "--lambda", "13"}).out, "48 even-d/odd-lambda\n");
  EXPECT_EQ(run({"count", "--d", "2", "--lambda", "12"}).out, "54 even-d/even-lambda\n");
  EXPECT_EQ(run({"count", "--d", "4", "--lambda", "2"}).out, "2 even-d/even-lambda\n");
  EXPECT_EQ(run({"count", "--n", "40", "--m", "5"}).out, "3 odd-d/odd-lambda\n");
  EXPECT_EQ(run({"count", "--d", "2", "--lambda", "5", "--oracle"}).out,
            "3 even-d/odd-lambda\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "--d", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "--d", "2"}).code, cli::kExitUsage);
  const auto bad_n = run({"count", "--n", "36", "--m", "5"});
  EXPECT_EQ(bad_n.code, cli::kExitUsage);
  EXPECT_NE(bad_n.err.find("n = lambda * 2^d"), std::string::npos) << bad_n.err;
  EXPECT_EQ(run({"count", "--d", "2", "--lambda", "3", "--m", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"table", "--d", "2", "--parity", "both", "--max-n", "40"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"canon", "/nonexistent"}).code, cli::kExitUsage);
}

TEST(Cli, Table) {
  const auto r = run({"table", "--d", "2", "--parity", "odd", "--max-n", "60"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "# f(n) = number of nonisomorphic OA(n, 4, 2, 2), even-d/odd-lambda, n <= 60\n"
            "# n f(n)\n12 1\n20 3\n28 7\n36 15\n44 28\n52 48\n60 79\n");
  // Identical output on every run.
  EXPECT_EQ(run({"table", "--d", "2", "--parity", "odd", "--max-n", "60"}).out, r.out);
}

TEST(Cli, Solutions) {
  EXPECT_EQ(run({"solutions", "--d", "2", "--lambda", "5"}).out,
            "-1 -1 -1 -1 -1 0\n-3 -1 -1 -1 1 0\n-1 -1 -1 1 -3 0\n");
  EXPECT_EQ(run({"solutions", "--d", "2", "--lambda", "3", "--oracle"}).out,
            "-1 -1 -1 -1 1 0\n");
}

TEST_F(CliFiles, CanonIsoVerify) {
  const auto design = build_catalog(2, 3).front();
  const auto a = write("a.txt", design, 2);
  const std::vector<int> order{2, 0, 3, 1}, signs{-1, 1, 1, -1};
  const auto b = write("b.txt", design.permute_columns(order).switch_signs(signs), 2);
  EXPECT_EQ(run({"canon", a}).out, "-4 -4 -4 -4 4\n");
  EXPECT_EQ(run({"canon", b}).out, "-4 -4 -4 -4 4\n");
  EXPECT_EQ(run({"iso", a, b}).out, "isomorphic\n");

  const auto catalog = build_catalog(2, 5);
  const auto c = write("c.txt", catalog[0], 2);
  const auto e = write("e.txt", catalog[1], 2);
  EXPECT_EQ(run({"iso", c, e}).out, "nonisomorphic\n");

  const auto ok = run({"verify", a});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("strength 2\n"), std::string::npos);
  EXPECT_NE(ok.out.find("\nOK\n"), std::string::npos);

  const auto bad = write("bad.txt", Design({{1, 1, 1, 1}, {1, 1, 1, 1}, {-1, -1, -1, -1},
                                            {-1, -1, -1, -1}}), 2);
  const auto fail = run({"verify", bad});
  EXPECT_EQ(fail.code, cli::kExitVerifyFailed);
  EXPECT_NE(fail.out.find("FAIL"), std::string::npos);

  std::ofstream(dir_ / "broken.txt") << "OA 2 2 2 1\n1 1\n1 7\n";
  const auto parse = run({"verify", (dir_ / "broken.txt").string()});
  EXPECT_EQ(parse.code, cli::kExitUsage);
  EXPECT_NE(parse.err.find("line 3"), std::string::npos) << parse.err;
}

TEST_F(CliFiles, BuildDirectoryThenVerifyEach) {
  const auto r = run({"build", "--d", "3", "--lambda", "5", "--out", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    ++files;
    const auto v = run({"verify", entry.path().string()});
    EXPECT_EQ(v.code, 0) << entry.path() << "\n" << v.out;
  }
  EXPECT_EQ(files, 3);
  EXPECT_TRUE(fs::exists(dir_ / "oa_40_5_2_3_1.txt"));
}

TEST_F(CliFiles, BuildStreamParsesBack) {
  const auto r = run({"build", "--d", "2", "--lambda", "7"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  const auto arrays = io::read_arrays(in);
  EXPECT_EQ(arrays.size(), 7u);
  const auto path = (dir_ / "all.txt").string();
  ASSERT_EQ(run({"build", "--d", "2", "--lambda", "7", "--out", path}).code, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), r.out);
}

}  // namespace
}  // namespace oa
