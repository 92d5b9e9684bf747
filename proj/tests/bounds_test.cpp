#include <gtest/gtest.h>

#include "goka/bounds.hpp"
#include "goka/families.hpp"
#include "goka/solver.hpp"
#include "goka/verify.hpp"

using namespace goka;

namespace {

Digraph p3() { return Digraph(3, {{0, 1}, {1, 2}}); }

std::vector<Edge> cycle_edges(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return e;
}

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return e;
}

}  // namespace

TEST(Rounding, CeilingAndFloorOfRationals) {
  EXPECT_EQ(round_up(Rational(18, 13)), 2);
  EXPECT_EQ(round_up(Rational(-3, 2)), -1);
  EXPECT_EQ(round_down(Rational(-3, 2)), -2);
  EXPECT_EQ(round_down(Rational(5, 2)), 2);
  EXPECT_EQ(round_up(Rational(4)), 4);
  EXPECT_EQ(to_string(Rational(10, 4)), "5/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
}

TEST(DegreeRatioBound, SmallExamples) {
  EXPECT_EQ(degree_ratio_lower_bound(p3(), 1), Rational(1));
  EXPECT_EQ(degree_ratio_lower_bound(bidirect(2, std::vector<Edge>{{0, 1}}), 1), Rational(1));
}

TEST(DegreeRatioBound, ExtremalCycleIsExact) {
  for (int t : {5, 6, 7}) EXPECT_EQ(degree_ratio_lower_bound(extremal_cycle_example(t).digraph, 1), Rational(3));
}

TEST(DegreeRatioBound, InapplicableWhenDenominatorIsNotPositive) {
  const Digraph in_star(4, {{0, 3}, {1, 3}, {2, 3}});
  EXPECT_FALSE(degree_ratio_lower_bound(in_star, -2).has_value());
  EXPECT_TRUE(degree_ratio_lower_bound(in_star, -1).has_value());
}

TEST(BipartiteBound, SharpnessInstance) {
  const Digraph d = bipartite_sharpness(2, 3);
  const auto t = degrees(d);
  EXPECT_EQ(t.min_in, 1);
  EXPECT_EQ(t.max_out, 3);
  const auto ub = bipartite_upper_bound(d, 2);
  ASSERT_TRUE(ub.has_value());
  EXPECT_EQ(ub->below_k, 4);
  EXPECT_EQ(ub->exact, Rational(5));
  EXPECT_EQ(ub->bound, 5);
  EXPECT_TRUE(verify_goka(d, ub->witness, 2).is_goka);
  EXPECT_EQ(degree_ratio_lower_bound(d, 2), Rational(2));
}

TEST(BipartiteBound, CompleteBipartiteTiesDropLowestSide) {
  std::vector<Edge> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
  const auto ub = bipartite_upper_bound(bidirect(6, e), 1);
  ASSERT_TRUE(ub.has_value());
  EXPECT_EQ(ub->bound, 3);
  EXPECT_EQ(ub->witness, VertexSet(6, {3, 4, 5}));
}

TEST(BipartiteBound, PathWithSource) {
  const auto ub = bipartite_upper_bound(p3(), 1);
  ASSERT_TRUE(ub.has_value());
  EXPECT_EQ(ub->below_k, 1);
  EXPECT_EQ(ub->bound, 2);
  EXPECT_EQ(min_goka_exact(p3(), 1).value, 2);
}

TEST(BipartiteBound, SourcesCountAsForcedForNonPositiveK) {
  // Two sources into one sink. Counting only in-degree < k would give 3/2 for
  // k = 0, below the true optimum 2.
  const Digraph d(3, {{0, 2}, {1, 2}});
  const auto ub = bipartite_upper_bound(d, 0);
  ASSERT_TRUE(ub.has_value());
  EXPECT_EQ(ub->below_k, 0);
  EXPECT_EQ(ub->forced, 2);
  EXPECT_EQ(min_goka_exact(d, 0).value, 2);
  EXPECT_LE(2, ub->bound);
  EXPECT_TRUE(verify_goka(d, ub->witness, 0).is_goka);
}

TEST(BipartiteBound, OddCycleIsInapplicable) {
  EXPECT_FALSE(bipartite_upper_bound(bidirect(5, cycle_edges(5)), 1).has_value());
}

TEST(GraphBounds, Examples) {
  EXPECT_EQ(graph_degree_lower_bound(5, cycle_edges(5), 1), 3);
  EXPECT_EQ(graph_degree_lower_bound(4, complete_edges(4), 1), 2);
  EXPECT_EQ(graph_degree_lower_bound(2, complete_edges(2), 1), 1);
  EXPECT_EQ(graph_parity_lower_bound(5, cycle_edges(5)), 2);
  EXPECT_EQ(graph_parity_lower_bound(4, complete_edges(4)), 2);
  EXPECT_EQ(graph_parity_lower_bound(2, complete_edges(2)), 1);
  EXPECT_EQ(min_goka_exact(bidirect(5, cycle_edges(5)), 1).value, 3);
}

TEST(BoundsReport, ExtremalCycle) {
  const auto r = bounds_report(extremal_cycle_example(5).digraph, 1);
  EXPECT_EQ(r.lower, Rational(3));
  EXPECT_EQ(r.lower_ceiling, 3);
  EXPECT_FALSE(r.upper.has_value());
  EXPECT_EQ(r.upper_reason, "not bipartite");
  // At t = 5 every u is joined both ways to all of v, so the graph bound applies.
  EXPECT_EQ(r.graph_degree_bound, 3);
  EXPECT_FALSE(bounds_report(extremal_cycle_example(6).digraph, 1).graph_degree_bound.has_value());
}

TEST(BoundsReport, PathAndSymmetricInput) {
  const auto r = bounds_report(p3(), 1);
  EXPECT_EQ(r.lower_ceiling, 1);
  ASSERT_TRUE(r.upper.has_value());
  EXPECT_EQ(r.upper->bound, 2);

  const auto c = bounds_report(bidirect(5, cycle_edges(5)), 1);
  EXPECT_EQ(c.graph_degree_bound, 3);
  EXPECT_EQ(c.graph_parity_bound, 2);
  const auto c2 = bounds_report(bidirect(5, cycle_edges(5)), 2);
  EXPECT_FALSE(c2.graph_parity_bound.has_value());
  EXPECT_FALSE(c2.graph_reason.empty());
}
