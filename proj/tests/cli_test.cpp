#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "goka/cli.hpp"

using namespace goka;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

const std::string p3 = "3 2\n0 1\n1 2\n";

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, SolveExtremalCycle) {
  const std::string text = to_text(extremal_cycle_example(5).digraph);
  const auto r = run({"solve", "-k", "1", "--input", "-"}, text);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "value: 3"));
  EXPECT_TRUE(has_line(r.out, "witness: 5,6,7"));
  EXPECT_TRUE(has_line(r.out, "optimal: true"));
}

TEST(Cli, SolveMatchesLibrary) {
  const auto r = run({"solve", "-k", "-1"}, p3);
  EXPECT_EQ(r.code, 0);
  const auto lib = min_goka_exact(parse_digraph(p3), -1);
  EXPECT_TRUE(has_line(r.out, "value: " + std::to_string(lib.value)));
  EXPECT_TRUE(has_line(r.out, "witness: " + format_set(lib.witness)));
  EXPECT_TRUE(has_line(r.out, "k: -1"));
}

TEST(Cli, ReportsAreByteIdentical) {
  EXPECT_EQ(run({"solve"}, p3).out, run({"solve"}, p3).out);
  EXPECT_EQ(run({"generate", "random", "digraph", "7", "--seed", "9"}).out,
            run({"generate", "random", "digraph", "7", "--seed", "9"}).out);
}

TEST(Cli, Gamma) {
  const auto r = run({"gamma", "--method", "naive"}, p3);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "command: gamma"));
  EXPECT_TRUE(has_line(r.out, "value: 2"));
  EXPECT_TRUE(has_line(r.out, "method: naive"));
}

TEST(Cli, VerifyFalseExitsOne) {
  const auto r = run({"verify", "-k", "1", "--set", "0"}, p3);
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has_line(r.out, "is_goka: false"));
  EXPECT_TRUE(has_line(r.out, "violation: 2 in_from_set=0 in_from_complement=1 reason=not-dominated"));
}

TEST(Cli, VerifyTrueExitsZero) {
  const auto r = run({"verify", "--set", "0,1"}, p3);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "is_goka: true"));
  EXPECT_TRUE(has_line(r.out, "violations: 0"));
}

TEST(Cli, VerifyRejectsBadSets) {
  EXPECT_EQ(run({"verify", "--set", "0,x"}, p3).code, 2);
  EXPECT_EQ(run({"verify", "--set", "5"}, p3).code, 2);
  EXPECT_EQ(run({"verify"}, p3).code, 2);
}

TEST(Cli, Bounds) {
  const auto r = run({"bounds", "-k", "2"}, to_text(bipartite_sharpness(2, 3)));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "lower_bound: 2"));
  EXPECT_TRUE(has_line(r.out, "upper_bound: 5"));
  EXPECT_TRUE(has_line(r.out, "below_k: 4"));

  const auto inapplicable = run({"bounds", "-k", "-2"}, "4 3\n0 3\n1 3\n2 3\n");
  EXPECT_EQ(inapplicable.code, 1);
  EXPECT_TRUE(has_line(inapplicable.out, "lower_bound: inapplicable (non-positive denominator)"));
}

TEST(Cli, Classify) {
  const auto r = run({"classify"}, p3);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "rooted_tree: true"));
  EXPECT_TRUE(has_line(r.out, "root: 0"));
}

TEST(Cli, GenerateGapCycle) {
  const auto r = run({"generate", "gap-cycle", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "# vertices: 8"));
  EXPECT_EQ(parse_digraph(r.out), gap_cycle(2));
}

TEST(Cli, GenerateThenClassifyConfirmsClass) {
  const std::vector<std::vector<std::string>> families{
      {"extremal-cycle", "6"},         {"bipartite-sharp", "2", "3"},     {"functional-sharp", "3", "1", "0", "2"},
      {"gap-cycle", "3"},              {"gap-tree", "3"},                 {"random", "digraph", "6"},
      {"random", "rooted_tree", "9"},  {"random", "contrafunctional", "7"}, {"random", "functional_connected", "8"},
      {"random", "directed_tree", "9"}, {"random", "bipartite", "8"}};
  for (const auto& fam : families) {
    std::vector<std::string> args{"generate"};
    args.insert(args.end(), fam.begin(), fam.end());
    const auto g = run(args);
    ASSERT_EQ(g.code, 0) << fam[0];
    std::string advertised;
    std::istringstream in(g.out);
    for (std::string l; std::getline(in, l);)
      if (l.rfind("# class: ", 0) == 0) advertised = l.substr(9);
    ASSERT_FALSE(advertised.empty());
    if (advertised == "any") continue;
    const auto c = run({"classify"}, g.out);
    EXPECT_TRUE(has_line(c.out, advertised + ": true")) << fam[0] << " " << advertised;
  }
}

TEST(Cli, GenerateErrors) {
  EXPECT_EQ(run({"generate", "nope", "3"}).code, 2);
  EXPECT_EQ(run({"generate", "gap-cycle"}).code, 2);
  EXPECT_EQ(run({"generate", "gap-cycle", "0"}).code, 2);
  EXPECT_EQ(run({"generate", "extremal-cycle", "x"}).code, 2);
  EXPECT_EQ(run({"generate", "random", "tree", "4"}).code, 2);
  EXPECT_EQ(run({"generate", "functional-sharp", "2", "1"}).code, 2);
}

TEST(Cli, GenerateToFile) {
  const std::string path = testing::TempDir() + "goka_gap.dg";
  const auto r = run({"generate", "gap-tree", "1", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(parse_digraph(read_file(path)), gap_tree(1));
}

TEST(Cli, ReduceEc3sToStdout) {
  const auto r = run({"reduce-ec3s", "-k", "0"}, "3\n0 1 2\n0 1 2\n0 1 2\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "# target: 16"));
  EXPECT_EQ(parse_digraph(r.out), reduce_ec3s(smallest_ec3s(), 0).digraph);
}

TEST(Cli, ReduceEc3sWithSidecar) {
  const std::string path = testing::TempDir() + "goka_red.dg";
  const auto r = run({"reduce-ec3s", "--k", "1", "--output", path}, "3\n0 1 2\n0 1 2\n0 1 2\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "target: 22"));
  EXPECT_EQ(parse_digraph(read_file(path)), reduce_ec3s(smallest_ec3s(), 1).digraph);
  EXPECT_TRUE(has_line(read_file(path + ".report"), "set_vertices: 3..5"));
}

TEST(Cli, ReduceEc3sRejectsIrregularInput) {
  EXPECT_EQ(run({"reduce-ec3s"}, "3\n0 1 2\n0 1 2\n").code, 2);
  EXPECT_EQ(run({"reduce-ec3s"}, "4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n").code, 2);
}

TEST(Cli, MalformedInputReportsLine) {
  const auto r = run({"solve"}, "3 2\n0 1\n1 1\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", "--bogus"}, p3).code, 2);
  EXPECT_EQ(run({"solve", "--method", "magic"}, p3).code, 2);
  EXPECT_EQ(run({"solve", "--input", "/nonexistent/file.dg"}).code, 2);
  EXPECT_EQ(run({"solve"}, "0 0\n").code, 2);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

TEST(Cli, TimeLimitFlagsIncumbent) {
  const std::string text = to_text(random_family(Family::digraph, 70, 7, 0.15));
  const auto r = run({"solve", "--time-limit", "0"}, text);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "optimal: false"));
}
