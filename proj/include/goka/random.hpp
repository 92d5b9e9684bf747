#pragma once

// Seeded random instances of each structural class. Only the raw output of
// std::mt19937_64 is used (its sequence is fixed by the standard), so a seed
// yields the same instance on every platform.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goka/digraph.hpp"
#include "goka/error.hpp"

namespace goka {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  /// Uniform integer in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  std::vector<Vertex> permutation(int n) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family { digraph, rooted_tree, contrafunctional, functional_connected, directed_tree, bipartite };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::digraph: return "digraph";
    case Family::rooted_tree: return "rooted_tree";
    case Family::contrafunctional: return "contrafunctional";
    case Family::functional_connected: return "functional_connected";
    case Family::directed_tree: return "directed_tree";
    case Family::bipartite: return "bipartite";
  }
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  for (Family f : {Family::digraph, Family::rooted_tree, Family::contrafunctional,
                   Family::functional_connected, Family::directed_tree, Family::bipartite})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

namespace detail {

/// Random labelled tree: each vertex of a random order attaches to a
/// uniformly chosen earlier one. Returns (parent, child) pairs.
inline std::vector<Edge> random_tree_edges(Rng& rng, int n) {
  const auto order = rng.permutation(n);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(order[rng.below(i)], order[i]);
  return edges;
}

}  // namespace detail

/// `density` is the arc probability for `digraph` and the edge probability
/// for `bipartite`; the tree and functional classes ignore it.
inline Digraph random_family(Family kind, int n, std::uint64_t seed, double density = 0.5) {
  if (n < 1) throw PreconditionError("random instances need n >= 1");
  Rng rng(seed);
  std::vector<Arc> arcs;
  switch (kind) {
    case Family::digraph:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v && rng.chance(density)) arcs.push_back({u, v});
      break;
    case Family::rooted_tree:
      for (auto [parent, child] : detail::random_tree_edges(rng, n)) arcs.push_back({parent, child});
      break;
    case Family::directed_tree:
      for (auto [a, b] : detail::random_tree_edges(rng, n)) {
        if (rng.chance(0.5)) arcs.push_back({a, b});
        else arcs.push_back({b, a});
      }
      break;
    case Family::contrafunctional:
      if (n < 2) throw PreconditionError("contrafunctional digraphs need n >= 2");
      for (int v = 0; v < n; ++v) {
        int u = rng.below(n - 1);
        if (u >= v) ++u;
        arcs.push_back({u, v});
      }
      break;
    case Family::functional_connected: {
      if (n < 2) throw PreconditionError("connected functional digraphs need n >= 2");
      const auto order = rng.permutation(n);
      const int cycle = rng.between(2, n);
      for (int i = 0; i < cycle; ++i) arcs.push_back({order[i], order[(i + 1) % cycle]});
      for (int i = cycle; i < n; ++i) arcs.push_back({order[i], order[rng.below(i)]});
      break;
    }
    case Family::bipartite: {
      const int left = rng.between(1, n);
      for (int u = 0; u < left; ++u)
        for (int v = left; v < n; ++v) {
          if (!rng.chance(density)) continue;
          switch (rng.below(3)) {
            case 0: arcs.push_back({u, v}); break;
            case 1: arcs.push_back({v, u}); break;
            default:
              arcs.push_back({u, v});
              arcs.push_back({v, u});
          }
        }
      break;
    }
  }
  return Digraph(n, arcs);
}

/// Erdos-Renyi simple graph.
inline std::vector<Edge> random_simple_graph(int n, std::uint64_t seed, double density) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(density)) edges.emplace_back(u, v);
  return edges;
}

}  // namespace goka
