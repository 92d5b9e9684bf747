#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "goka/random.hpp"
#include "goka/solver.hpp"
#include "goka/verify.hpp"

using namespace goka;

namespace {

Digraph p3() { return Digraph(3, {{0, 1}, {1, 2}}); }
Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, arcs);
}

}  // namespace

TEST(Solver, PathValues) {
  const auto r = min_goka_exact(p3(), 1);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.witness, VertexSet(3, {0, 1}));
  EXPECT_TRUE(r.optimal);
  EXPECT_EQ(min_goka_exact(p3(), 0).value, 2);
  const auto g = min_dominating_exact(p3());
  EXPECT_EQ(g.value, 2);
  EXPECT_EQ(g.witness, VertexSet(3, {0, 1}));
}

TEST(Solver, DirectedFourCycle) {
  const auto r = min_goka_exact(directed_cycle(4), 1);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.witness, VertexSet(4, {0, 2}));
  EXPECT_EQ(min_dominating_exact(directed_cycle(4)).witness, VertexSet(4, {0, 2}));
}

TEST(Solver, FiveCycles) {
  const auto directed = min_goka_exact(directed_cycle(5), 1);
  EXPECT_EQ(directed.value, 3);
  EXPECT_EQ(directed.witness, VertexSet(5, {0, 1, 3}));
  const std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  const auto both = min_goka_exact(bidirect(5, c5), 1);
  EXPECT_EQ(both.value, 3);
  EXPECT_EQ(both.witness, VertexSet(5, {0, 1, 3}));
}

TEST(Solver, SourcesAreForced) {
  const auto r = min_goka_exact(p3(), 1);
  EXPECT_TRUE(r.forced_prefix.contains(0));
  EXPECT_TRUE(r.forced_prefix.is_subset_of(r.witness));
}

TEST(Solver, EmptyDigraphIsRejected) {
  EXPECT_THROW(min_goka_exact(Digraph(0, {}), 1), PreconditionError);
  EXPECT_THROW(greedy_goka(Digraph(0, {}), 1), PreconditionError);
}

TEST(Solver, NaiveRefusesLargeInputs) {
  EXPECT_THROW(min_goka_naive(random_family(Family::digraph, 30, 1, 0.1), 1), PreconditionError);
}

TEST(Solver, SingleVertex) {
  const Digraph d(1, {});
  EXPECT_EQ(min_goka_exact(d, 1).value, 1);
  EXPECT_EQ(min_dominating_exact(d).value, 1);
}

TEST(Solver, TimeLimitReturnsCertifiedIncumbent) {
  const Digraph d = random_family(Family::digraph, 70, 7, 0.15);
  const auto r = min_goka_exact(d, 1, std::chrono::duration<double>(0));
  EXPECT_FALSE(r.optimal);
  EXPECT_TRUE(verify_goka(d, r.witness, 1).is_goka);
  EXPECT_EQ(static_cast<std::size_t>(r.value), r.witness.size());
}

TEST(Solver, GreedyIsCertifiedUpperBound) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = random_family(Family::digraph, 1 + static_cast<int>(seed % 9), seed, 0.4);
    for (int k : {-1, 0, 1, 2}) {
      const auto g = greedy_goka(d, k);
      EXPECT_FALSE(g.optimal);
      EXPECT_TRUE(verify_goka(d, g.witness, k).is_goka);
      EXPECT_GE(g.value, min_goka_exact(d, k).value);
    }
    const auto gd = greedy_dominating(d);
    EXPECT_TRUE(is_dominating(d, gd.witness));
  }
}

TEST(Solver, MatchesIndependentBruteForce) {
  for (std::uint64_t seed = 100; seed < 250; ++seed) {
    const int n = 1 + static_cast<int>(seed % 9);
    const Digraph d = random_family(Family::digraph, n, seed, seed % 2 ? 0.3 : 0.6);
    for (int k : {-2, -1, 0, 1, 2, 3}) {
      const auto [value, witness] = brute::min_alliance(n, d.arcs(), k);
      const auto r = min_goka_exact(d, k);
      ASSERT_EQ(r.value, value) << "seed " << seed << " k " << k;
      EXPECT_EQ(r.witness.members(), witness) << "seed " << seed << " k " << k;
      EXPECT_TRUE(r.optimal);
    }
    const auto [gamma, dom] = brute::min_dominating(n, d.arcs());
    EXPECT_EQ(min_dominating_exact(d).value, gamma);
    EXPECT_EQ(min_dominating_exact(d).witness.members(), dom);
  }
}

TEST(Solver, NaiveAndExactAgreeThroughSolve) {
  const Digraph d = random_family(Family::digraph, 7, 3, 0.5);
  const auto a = solve(d, Objective::alliance, 1, Method::exact);
  const auto b = solve(d, Objective::alliance, 1, Method::naive);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(b.method, Method::naive);
  EXPECT_EQ(to_string(Method::greedy), "greedy");
}
