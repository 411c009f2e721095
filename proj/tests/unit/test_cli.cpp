#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "tverberg/point_io.hpp"

using namespace tverberg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tverberg_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const PointSet& s) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << format_points(s);
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SolvePentagon) {
  const std::string file = write("pentagon.txt", oracle::regular_polygon(5));
  const Outcome r = run({"solve", file});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["tool"], "tverberg");
  EXPECT_EQ(doc["mode"], "odd-cycle");
  EXPECT_EQ(doc["edges"].size(), 5u);
  EXPECT_EQ(doc["input"]["points"], 5);
  EXPECT_EQ(doc["input"]["digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
  const PointSet s = oracle::regular_polygon(5);
  const Point w{doc["witness"][0].get<double>(), doc["witness"][1].get<double>()};
  for (const auto& e : doc["edges"]) {
    EXPECT_GE(oracle::depth(w, s[e[0].get<std::size_t>()], s[e[1].get<std::size_t>()]), -1e-9);
  }
}

TEST_F(CliTest, SolveThenVerifyRoundTrip) {
  std::mt19937_64 rng(81);
  const std::string file = write("seven.txt", oracle::random_planar(rng, 7));
  const Outcome solved = run({"solve", file, "--seed", "4"});
  ASSERT_EQ(solved.code, 0) << solved.err;
  const auto doc = nlohmann::json::parse(solved.out);
  std::string edges;
  for (const auto& e : doc["edges"]) {
    if (!edges.empty()) edges += ",";
    edges += std::to_string(e[0].get<int>()) + "-" + std::to_string(e[1].get<int>());
  }
  const Outcome checked = run({"verify", file, "--edges", edges});
  EXPECT_EQ(checked.code, 0);
  EXPECT_EQ(checked.out.rfind("TVERBERG", 0), 0u);
}

TEST_F(CliTest, SolveIsDeterministicAcrossJobs) {
  std::mt19937_64 rng(82);
  const std::string file = write("eleven.txt", oracle::random_planar(rng, 11));
  const Outcome a = run({"solve", file, "--jobs", "1"});
  const Outcome b = run({"solve", file, "--jobs", "2"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, SolveMethods) {
  const std::string convex = write("hept.txt", oracle::regular_polygon(7));
  const Outcome c = run({"solve", convex, "--method", "convex"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(nlohmann::json::parse(c.out)["mode"], "convex-fast");
  const std::string four = write("four.txt", oracle::unit_square());
  const Outcome f = run({"solve", four, "--method", "four-point"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(nlohmann::json::parse(f.out)["mode"], "four-point");
  EXPECT_EQ(run({"solve", four, "--method", "convex"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", four, "--method", "spiral"}).code, cli::kExitUsage);
}

TEST_F(CliTest, SolveRendersSvg) {
  const std::string file = write("pentagon.txt", oracle::regular_polygon(5));
  const std::string svg = (dir_ / "out.svg").string();
  ASSERT_EQ(run({"solve", file, "--render", svg}).code, 0);
  std::ifstream in(svg);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("<svg"), std::string::npos);
}

TEST_F(CliTest, VerifySquareBoundaryCycle) {
  const std::string file = write("square.txt", oracle::unit_square());
  const Outcome r = run({"verify", file, "--edges", "0-1,1-2,2-3,3-0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("witness (0.5, 0.5)"), std::string::npos);
  EXPECT_NE(r.out.find("min_margin 0\n"), std::string::npos);
}

TEST_F(CliTest, VerifyNegative) {
  const std::string file = write("far.txt", PointSet({Point{0, 0}, Point{1, 0}, Point{10, 0}, Point{11, 0.5}}));
  const Outcome r = run({"verify", file, "--edges", "0-1,2-3"});
  EXPECT_EQ(r.code, cli::kExitNegative);
  EXPECT_EQ(r.out.rfind("NOT TVERBERG", 0), 0u);
}

TEST_F(CliTest, VerifyBadEdges) {
  const std::string file = write("square.txt", oracle::unit_square());
  EXPECT_EQ(run({"verify", file, "--edges", "0-9"}).code, cli::kExitUsage);
}

TEST_F(CliTest, LensCheckSquareAbsentEverywhere) {
  const std::string file = write("square.txt", oracle::unit_square());
  const Outcome r = run({"lens-check", file, "--alpha", "1.5809", "--all-cycles"});
  EXPECT_EQ(r.code, cli::kExitNegative);
  std::size_t absent = 0;
  for (std::size_t at = r.out.find("ABSENT"); at != std::string::npos; at = r.out.find("ABSENT", at + 1)) ++absent;
  EXPECT_EQ(absent, 3u);
  EXPECT_EQ(r.out.find("PRESENT"), std::string::npos);
}

TEST_F(CliTest, LensCheckPentagramPresent) {
  const std::string file = write("pentagon.txt", oracle::regular_polygon(5));
  const Outcome r = run({"lens-check", file, "--alpha", "2.0943951023931953", "--edges", "0-2,2-4,4-1,1-3,3-0"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PRESENT"), std::string::npos);
}

TEST_F(CliTest, EnumerateAndCounterexampleExit) {
  const std::string file = write("square.txt", oracle::unit_square());
  const Outcome r = run({"enumerate", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total 3"), std::string::npos);
  const Outcome p = run({"enumerate", file, "--paths"});
  EXPECT_NE(p.out.find("total 12"), std::string::npos);
}

TEST_F(CliTest, PartitionJson) {
  std::mt19937_64 rng(83);
  const std::string file = write("seven.txt", oracle::random_planar(rng, 7));
  const Outcome r = run({"partition", file, "--r", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["r"], 3);
  EXPECT_EQ(doc["parts"].size(), 3u);
  EXPECT_TRUE(doc["min_degree_check"].get<bool>());
  EXPECT_EQ(run({"partition", file, "--r", "4"}).code, cli::kExitUsage);
}

TEST_F(CliTest, GenWritesParsableFile) {
  const std::string out = (dir_ / "gen.txt").string();
  ASSERT_EQ(run({"gen", "convex", "7", "--seed", "2", "--out", out}).code, 0);
  const PointSet s = read_points_file(out);
  EXPECT_EQ(s.size(), 7u);
  const Outcome again = run({"gen", "convex", "7", "--seed", "2"});
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(again.out, text);
  EXPECT_EQ(run({"gen", "spiral", "7"}).code, cli::kExitUsage);
}

TEST_F(CliTest, RenderCountsElements) {
  const std::string file = write("tri.txt", PointSet({Point{0, 0}, Point{3, 0.4}, Point{1.2, 2}}));
  const Outcome r = run({"render", file, "--labels"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("class=\"witness\""), std::string::npos);
  const Outcome bare = run({"render", file, "--edges", "0-1", "--no-disks"});
  EXPECT_EQ(bare.out.find("class=\"disk\""), std::string::npos);
}

TEST_F(CliTest, CheckGp) {
  const std::string sq = write("square.txt", oracle::unit_square());
  EXPECT_EQ(run({"check-gp", sq}).code, cli::kExitNegative);
  const std::string tri = write("tri.txt", PointSet({Point{0, 0}, Point{3, 0.4}, Point{1.2, 2}}));
  EXPECT_EQ(run({"check-gp", tri}).code, 0);
}

TEST_F(CliTest, BenchTable) {
  const Outcome r = run({"bench", "--sizes", "5,6", "--count", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mean_ms"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", (dir_ / "missing.txt").string()}).code, cli::kExitUsage);
  const std::string bad = (dir_ / "bad.txt").string();
  std::ofstream(bad) << "0 0\n0 0\n";
  const Outcome r = run({"solve", bad});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(CliHelpers, Fnv1a64KnownValues) {
  EXPECT_EQ(cli::fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(cli::fnv1a64("a"), "af63dc4c8601ec8c");
}
