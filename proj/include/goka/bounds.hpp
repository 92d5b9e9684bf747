#pragma once

// Closed-form bounds on the global offensive k-alliance number.
//
//   degree-ratio lower bound   (k + mindeg^-) n / (2 maxdeg^+ + mindeg^- + k)
//   bipartite upper bound      (n + n_forced) / 2, with an explicit witness
//   graph lower bounds         the degree-ratio bound on a complete
//                              biorientation, and the older parity-split
//                              bound for k = 1
//
// Every ratio is kept as an exact rational.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "goka/digraph.hpp"
#include "goka/verify.hpp"

namespace goka {

using Rational = boost::rational<long long>;

inline long long round_up(const Rational& r) {
  return detail::ceil_div(r.numerator(), r.denominator());
}

inline long long round_down(const Rational& r) {
  return detail::floor_div(r.numerator(), r.denominator());
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// nullopt when the denominator is not positive.
inline std::optional<Rational> degree_ratio_lower_bound(const Digraph& d, int k) {
  const DegreeTable t = degrees(d);
  const long long den = 2LL * t.max_out + t.min_in + k;
  if (den <= 0) return std::nullopt;
  return Rational((static_cast<long long>(k) + t.min_in) * d.order(), den);
}

/// Vertices that can never be left outside a k-alliance: in-degree below k,
/// or in-degree 0.
inline int forced_count(const Digraph& d, int k) {
  int c = 0;
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.in_degree(v) < std::max(k, 1)) ++c;
  return c;
}

inline int below_k_count(const Digraph& d, int k) {
  int c = 0;
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.in_degree(v) < k) ++c;
  return c;
}

struct BipartiteUpperBound {
  Rational exact;       // (n + forced) / 2
  long long bound = 0;  // floor of exact
  int below_k = 0;      // vertices of in-degree < k
  int forced = 0;       // vertices of in-degree < max(k, 1)
  VertexSet dropped;    // larger side of the bipartition, forced vertices removed
  VertexSet witness;    // V - dropped
};

/// nullopt for non-bipartite input. In each component the side with more
/// unforced vertices is dropped; ties drop the side holding the component's
/// lowest id.
inline std::optional<BipartiteUpperBound> bipartite_upper_bound(const Digraph& d, int k) {
  const auto coloring = two_coloring(d);
  if (!coloring) return std::nullopt;
  const int n = d.order();
  const auto comp = components(d);
  const int ncomp = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  const int threshold = std::max(k, 1);

  std::vector<std::array<int, 2>> unforced(static_cast<std::size_t>(ncomp), {0, 0});
  for (Vertex v = 0; v < n; ++v)
    if (d.in_degree(v) >= threshold) ++unforced[comp[v]][(*coloring)[v]];

  std::vector<bool> dropped(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) {
    const auto& c = unforced[comp[v]];
    const int side = c[1] > c[0] ? 1 : 0;
    if ((*coloring)[v] == side && d.in_degree(v) >= threshold) dropped[v] = true;
  }

  BipartiteUpperBound r;
  r.below_k = below_k_count(d, k);
  r.forced = forced_count(d, k);
  r.exact = Rational(static_cast<long long>(n) + r.forced, 2);
  r.bound = round_down(r.exact);
  r.dropped = VertexSet::from_mask(dropped);
  r.witness = r.dropped.complement();
  return r;
}

namespace detail {

struct GraphDegrees {
  int min = 0;
  int max = 0;
};

inline GraphDegrees graph_degrees(int n, std::span<const Edge> edges) {
  const Digraph d = bidirect(n, edges);
  const DegreeTable t = degrees(d);
  return {t.min_in, t.max_in};
}

}  // namespace detail

/// ceil((k + mindeg) n / (2 maxdeg + mindeg + k)) for a simple graph.
inline std::optional<long long> graph_degree_lower_bound(int n, std::span<const Edge> edges, int k) {
  if (n <= 0) return std::nullopt;
  const auto g = detail::graph_degrees(n, edges);
  const long long den = 2LL * g.max + g.min + k;
  if (den <= 0) return std::nullopt;
  return detail::ceil_div((static_cast<long long>(k) + g.min) * n, den);
}

/// Older k = 1 graph bound: the degree-ratio form when mindeg is odd,
/// ceil(n mindeg / (2 maxdeg + mindeg)) otherwise.
inline std::optional<long long> graph_parity_lower_bound(int n, std::span<const Edge> edges) {
  if (n <= 0) return std::nullopt;
  const auto g = detail::graph_degrees(n, edges);
  if (g.min % 2 == 1) return detail::ceil_div((1LL + g.min) * n, 2LL * g.max + g.min + 1);
  const long long den = 2LL * g.max + g.min;
  if (den <= 0) return std::nullopt;
  return detail::ceil_div(static_cast<long long>(n) * g.min, den);
}

struct BoundsReport {
  int k = 0;
  std::optional<Rational> lower;
  std::optional<long long> lower_ceiling;
  std::string lower_reason;
  int below_k = 0;
  int forced = 0;
  std::optional<BipartiteUpperBound> upper;
  std::string upper_reason;
  std::optional<long long> graph_degree_bound;
  std::optional<long long> graph_parity_bound;
  std::string graph_reason;
};

inline BoundsReport bounds_report(const Digraph& d, int k) {
  BoundsReport r;
  r.k = k;
  r.lower = degree_ratio_lower_bound(d, k);
  if (r.lower) r.lower_ceiling = round_up(*r.lower);
  else r.lower_reason = "non-positive denominator";
  r.below_k = below_k_count(d, k);
  r.forced = forced_count(d, k);
  r.upper = bipartite_upper_bound(d, k);
  if (!r.upper) r.upper_reason = "not bipartite";
  if (is_symmetric(d) && d.order() > 0) {
    const auto edges = underlying_edges(d);
    r.graph_degree_bound = graph_degree_lower_bound(d.order(), edges, k);
    if (k == 1) r.graph_parity_bound = graph_parity_lower_bound(d.order(), edges);
    if (!r.graph_degree_bound) r.graph_reason = "non-positive denominator";
    else if (k != 1) r.graph_reason = "parity bound is stated for k = 1 only";
    else if (!r.graph_parity_bound) r.graph_reason = "parity bound undefined for an edgeless graph";
  } else {
    r.graph_reason = d.order() == 0 ? "empty digraph" : "not a complete biorientation";
  }
  return r;
}

}  // namespace goka
