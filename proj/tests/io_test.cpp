#include <gtest/gtest.h>

#include <sstream>

#include "goka/digraph_io.hpp"
#include "goka/error.hpp"

using namespace goka;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_digraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(DigraphIo, ParsesCommentsAndBlankLines) {
  const Digraph d = parse_digraph("# P3\n3 2\n\n0 1\n  # middle\n1 2\n");
  EXPECT_EQ(d, Digraph(3, {{0, 1}, {1, 2}}));
}

TEST(DigraphIo, RoundTrip) {
  const Digraph d(4, {{3, 0}, {0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(to_text(d), "4 4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(parse_digraph(to_text(d)), d);
}

TEST(DigraphIo, EmptyDigraph) {
  EXPECT_EQ(parse_digraph("0 0\n").order(), 0);
  EXPECT_EQ(to_text(Digraph(0, {})), "0 0\n");
}

TEST(DigraphIo, ReportsLineNumbers) {
  EXPECT_EQ(error_line(""), 0u);
  EXPECT_EQ(error_line("3\n"), 1u);
  EXPECT_EQ(error_line("3 2\n0 1\n1 1\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n1 3\n"), 3u);
  EXPECT_EQ(error_line("# c\n3 1\n0 x\n"), 3u);
  EXPECT_EQ(error_line("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n"), 2u);
  EXPECT_EQ(error_line("3 1\n0 1 2\n"), 2u);
  EXPECT_EQ(error_line("-1 0\n"), 1u);
}

TEST(DigraphIo, MessagesNameTheProblem) {
  try {
    parse_digraph("2 1\n0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), "line 2: arc 0 0: loop");
  }
}
