#include <gtest/gtest.h>

#include "goka/digraph.hpp"
#include "goka/verify.hpp"

using namespace goka;

namespace {

Digraph p3() { return Digraph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST(Verify, PathWithSourceOnlyFails) {
  const auto cert = verify_goka(p3(), VertexSet(3, {0}), 1);
  EXPECT_FALSE(cert.is_goka);
  EXPECT_FALSE(cert.is_dominating);
  ASSERT_EQ(cert.violations.size(), 1u);
  const Violation& v = cert.violations[0];
  EXPECT_EQ(v.vertex, 2);
  EXPECT_EQ(v.in_from_set, 0);
  EXPECT_EQ(v.in_from_complement, 1);
  EXPECT_EQ(v.reason, ViolationReason::not_dominated);
  EXPECT_EQ(to_string(v.reason), "not-dominated");
}

TEST(Verify, PathFirstTwoVerticesPass) {
  const auto cert = verify_goka(p3(), VertexSet(3, {0, 1}), 1);
  EXPECT_TRUE(cert.is_goka);
  EXPECT_TRUE(cert.is_dominating);
  EXPECT_TRUE(cert.violations.empty());
}

TEST(Verify, MarginViolation) {
  // 2 has in-neighbors 0 (inside) and 1 (outside).
  const Digraph d(3, {{0, 2}, {1, 2}, {0, 1}});
  const auto cert = verify_goka(d, VertexSet(3, {0}), 1);
  EXPECT_TRUE(cert.is_dominating);
  ASSERT_EQ(cert.violations.size(), 1u);
  EXPECT_EQ(cert.violations[0].vertex, 2);
  EXPECT_EQ(cert.violations[0].reason, ViolationReason::margin);
  EXPECT_TRUE(verify_goka(d, VertexSet(3, {0}), 0).is_goka);
}

TEST(Verify, WholeVertexSetAlwaysWorks) {
  for (int k = -3; k <= 5; ++k) EXPECT_TRUE(verify_goka(p3(), VertexSet::all(3), k).is_goka);
}

TEST(Verify, UniverseMismatchThrows) {
  EXPECT_THROW(verify_goka(p3(), VertexSet(4, {0}), 1), PreconditionError);
}

TEST(Verify, StudiedRangeOfK) {
  // max in-degree 1: range is [1, 1].
  EXPECT_TRUE(k_in_studied_range(p3(), 1));
  EXPECT_FALSE(k_in_studied_range(p3(), 0));
  EXPECT_FALSE(k_in_studied_range(p3(), 2));
}

TEST(Verify, OutsideThreshold) {
  EXPECT_EQ(detail::outside_threshold(3, 1), 2);
  EXPECT_EQ(detail::outside_threshold(4, 1), 3);
  EXPECT_EQ(detail::outside_threshold(4, -4), 1);
  EXPECT_EQ(detail::outside_threshold(0, 0), 1);
}

TEST(Verify, UndirectedCycle) {
  const std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  EXPECT_TRUE(verify_goka_undirected(5, c5, VertexSet(5, {0, 1, 3}), 1));
  EXPECT_FALSE(verify_goka_undirected(5, c5, VertexSet(5, {0, 2}), 1));
  EXPECT_TRUE(verify_goka_undirected(5, c5, VertexSet(5, {0, 2}), 0));
}
