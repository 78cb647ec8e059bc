#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mvmatch/cli.hpp"
#include "mvmatch/synth.hpp"
#include "mvmatch/text_format.hpp"
#include "support.hpp"

namespace mvmatch {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::ofstream(example_) << "word\ttag\nc\tB\na\tA\nb\tB\nb\tA\na\tB\na\tA\nb\tC\nc\tB\n";
  }

  testing::TempDir dir_;
  std::string example_ = (dir_ / "example.tsv").string();
};

TEST_F(CliTest, SearchPrintsZeroBasedPositions) {
  const auto r = run({"search", "--text", example_, "--pattern", "B A b B"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST_F(CliTest, SearchBaseOne) {
  const auto r = run({"search", "--text", example_, "--pattern", "B A b B", "--base", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
}

TEST_F(CliTest, SearchWithoutMatches) {
  const auto text = read_text_file(example_);
  const auto p = parse_pattern_string("A A A A A", text.registry_ptr());
  for (std::size_t i = 0; i + p.size() <= text.length(); ++i) ASSERT_FALSE(testing::occurs_oracle(text, p, i));

  const auto r = run({"search", "--text", example_, "--pattern", "A A A A A"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
}

TEST_F(CliTest, SearchErrorsExitTwo) {
  EXPECT_EQ(run({"search", "--text", (dir_ / "nope.tsv").string(), "--pattern", "a"}).code, 2);
  EXPECT_EQ(run({"search", "--text", example_, "--pattern", "B Q"}).code, 2);
  EXPECT_EQ(run({"search", "--text", example_, "--pattern", " "}).code, 2);
  EXPECT_EQ(run({"search", "--text", example_}).code, 2);
  EXPECT_EQ(run({"search", "--text", example_, "--pattern", "a", "--base", "2"}).code, 2);
  EXPECT_EQ(run({"search", "--text", example_, "--pattern", "a", "--algorithm", "kmp"}).code, 2);
  std::ofstream(dir_ / "bad.tsv") << "word\ttag\nrun\twalk\nwalk\trun\n";
  const auto r = run({"search", "--text", (dir_ / "bad.tsv").string(), "--pattern", "run"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("walk"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST_F(CliTest, SearchCountAndStats) {
  auto r = run({"search", "--text", example_, "--pattern", "b", "--count"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  r = run({"search", "--text", example_, "--pattern", "B A b B", "--stats"});
  EXPECT_EQ(r.out, "4\n");
  EXPECT_EQ(r.err, "alignments=3 symbol_reads=10 matches=1\n");
}

TEST_F(CliTest, OutputIndependentOfAlgorithmAndThreads) {
  const auto instance = generate_instance(GenConfig{3, 3000, 2, 3, 5, PatternMode::planted});
  const auto text_path = (dir_ / "gen.tsv").string();
  write_text_file(text_path, instance.text);
  const std::string pattern = format_pattern(instance.pattern);
  const auto h = run({"search", "--text", text_path, "--pattern", pattern});
  const auto n = run({"search", "--text", text_path, "--pattern", pattern, "--algorithm", "naive"});
  const auto p = run({"search", "--text", text_path, "--pattern", pattern, "--threads", "3"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, n.out);
  EXPECT_EQ(h.out, p.out);
}

TEST_F(CliTest, GenWritesParseableFiles) {
  const auto text_path = (dir_ / "t.tsv").string();
  const auto pattern_path = (dir_ / "p.txt").string();
  const auto r = run({"gen", "--k", "3", "--n", "100000", "--sigma", "10", "--m", "10", "--seed", "1", "--out-text",
                      text_path, "--out-pattern", pattern_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto text = read_text_file(text_path);
  EXPECT_EQ(text.length(), 100000u);
  EXPECT_EQ(text.view_count(), 3u);
  const auto expected = generate_instance(GenConfig{3, 100000, 10, 10, 1, PatternMode::uniform});
  EXPECT_EQ(read_file(pattern_path), format_pattern(expected.pattern) + "\n");
}

TEST_F(CliTest, GenPlantedThenSearch) {
  const auto text_path = (dir_ / "t.tsv").string();
  const auto pattern_path = (dir_ / "p.txt").string();
  const auto g = run({"gen", "--k", "2", "--n", "500", "--sigma", "3", "--m", "6", "--seed", "9", "--mode", "planted",
                      "--out-text", text_path, "--out-pattern", pattern_path});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_NE(g.out.find("planted_at="), std::string::npos);
  EXPECT_EQ(run({"search", "--text", text_path, "--pattern-file", pattern_path}).code, 0);
}

TEST_F(CliTest, GenErrors) {
  const auto t = (dir_ / "t.tsv").string();
  const auto p = (dir_ / "p.txt").string();
  EXPECT_EQ(run({"gen", "--sigma", "0", "--out-text", t, "--out-pattern", p}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "3", "--m", "4", "--mode", "planted", "--out-text", t, "--out-pattern", p}).code, 2);
  EXPECT_EQ(run({"gen", "--out-text", t}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "10", "--out-text", (dir_ / "no" / "t.tsv").string(), "--out-pattern", p}).code, 2);
}

TEST_F(CliTest, BenchSingleLengthCountsOnly) {
  const auto csv = (dir_ / "b.csv").string();
  const auto r = run({"bench", "--n", "2000", "--m-list", "4", "--instances", "1", "--counts-only", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto body = read_file(csv);
  EXPECT_EQ(std::count(body.begin(), body.end(), '\n'), 3);
  EXPECT_EQ(body.rfind("m,algorithm,instances,total_time_s,total_symbol_reads,total_alignments,total_matches\n", 0), 0u);
  EXPECT_NE(r.out.find("read_ratio"), std::string::npos);
}

TEST_F(CliTest, BenchRangeProducesOneRowPerLengthAndAlgorithm) {
  const auto csv = (dir_ / "b.csv").string();
  const auto r = run({"bench", "--n", "200", "--instances", "1", "--counts-only", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto body = read_file(csv);
  EXPECT_EQ(std::count(body.begin(), body.end(), '\n'), 1 + 29 * 2);
}

TEST_F(CliTest, BenchErrors) {
  const auto csv = (dir_ / "b.csv").string();
  EXPECT_EQ(run({"bench", "--m-min", "5", "--m-max", "4", "--csv", csv}).code, 2);
  EXPECT_EQ(run({"bench", "--m-list", "4", "--m-min", "2", "--csv", csv}).code, 2);
  EXPECT_EQ(run({"bench", "--m-list", "4", "--instances", "0", "--csv", csv}).code, 2);
  EXPECT_EQ(run({"bench", "--m-list", "4", "--algorithms", "kmp", "--csv", csv}).code, 2);
  EXPECT_EQ(run({"bench", "--n", "100", "--m-list", "4", "--instances", "1", "--csv",
                 (dir_ / "no" / "b.csv").string()})
                .code,
            2);
}

TEST(Cli, UsageAndHelp) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const auto r = run({"search", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--pattern"), std::string::npos);
}

}  // namespace
}  // namespace mvmatch
