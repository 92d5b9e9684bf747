#pragma once

// Plain-text digraph format:
//
//   # comment lines start with '#'
//   n m
//   u v        (m lines, arc u -> v)
//
// Ids are whitespace-separated decimals. The writer emits arcs in
// lexicographic order, so write(read(write(D))) is byte-identical to write(D).

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "goka/digraph.hpp"
#include "goka/error.hpp"

namespace goka {

namespace detail {

/// Splits a line into whitespace-separated tokens.
inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_integer(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

inline int parse_count(std::string_view tok, std::size_t line_no, const char* what) {
  long long v = parse_integer(tok, line_no);
  if (v < 0 || v > 100'000'000)
    throw ParseError(line_no, std::string(what) + " out of range: " + std::string(tok));
  return static_cast<int>(v);
}

/// Reads data lines, skipping blank and '#' comment lines. Yields
/// (line number, tokens).
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& toks) {
    while (std::getline(in_, buf_)) {
      ++line_;
      std::string_view sv(buf_);
      auto first = sv.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || sv[first] == '#') continue;
      toks = tokens(sv);
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::string buf_;
  std::size_t line_ = 0;
};

}  // namespace detail

inline Digraph read_digraph(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string_view> toks;
  if (!reader.next(toks)) throw ParseError(reader.line(), "missing header line 'n m'");
  if (toks.size() != 2) throw ParseError(reader.line(), "header must be 'n m'");
  const int n = detail::parse_count(toks[0], reader.line(), "vertex count");
  const int m = detail::parse_count(toks[1], reader.line(), "arc count");

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  while (reader.next(toks)) {
    if (static_cast<int>(arcs.size()) == m)
      throw ParseError(reader.line(), "more arc lines than the declared " + std::to_string(m));
    if (toks.size() != 2) throw ParseError(reader.line(), "arc line must be 'u v'");
    long long u = detail::parse_integer(toks[0], reader.line());
    long long v = detail::parse_integer(toks[1], reader.line());
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(reader.line(), "arc " + std::string(toks[0]) + " " + std::string(toks[1]) +
                                          ": endpoint out of range [0," + std::to_string(n) + ")");
    if (u == v) throw ParseError(reader.line(), "arc " + std::string(toks[0]) + " " +
                                                    std::string(toks[1]) + ": loop");
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<int>(arcs.size()) != m)
    throw ParseError(reader.line(), "expected " + std::to_string(m) + " arcs, found " +
                                        std::to_string(arcs.size()));
  return Digraph(n, arcs);
}

inline Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return read_digraph(in);
}

inline void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

inline std::string to_text(const Digraph& d) {
  std::ostringstream out;
  write_digraph(out, d);
  return out.str();
}

}  // namespace goka
