#pragma once

// Immutable digraph over dense vertex ids 0..n-1, vertex sets over the same
// universe, and the structural queries the rest of the library builds on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goka/error.hpp"

namespace goka {

using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Undirected edge of a simple graph; orientation carries no meaning.
using Edge = std::pair<Vertex, Vertex>;

inline std::string arc_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

class Digraph {
 public:
  Digraph() = default;

  /// Throws GraphError on an out-of-range endpoint or a loop. Duplicate arcs
  /// are merged.
  Digraph(int n, std::span<const Arc> arcs) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    arcs_.assign(arcs.begin(), arcs.end());
    for (const Arc& a : arcs_) {
      if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
        throw GraphError("arc " + arc_name(a.tail, a.head) +
                         ": endpoint out of range [0," + std::to_string(n) + ")");
      if (a.tail == a.head) throw GraphError("arc " + arc_name(a.tail, a.head) + ": loop");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

    out_.assign(static_cast<std::size_t>(n), {});
    in_.assign(static_cast<std::size_t>(n), {});
    for (const Arc& a : arcs_) {
      out_[a.tail].push_back(a.head);
      in_[a.head].push_back(a.tail);
    }
    // arcs_ is sorted by (tail, head), so out_ lists are already sorted and
    // in_ lists receive tails in increasing order.
  }

  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Arcs in lexicographic order.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

  bool has_arc(Vertex u, Vertex v) const {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Sorted, duplicate-free set of vertex ids tied to the universe size it was
/// created against.
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(int universe, std::vector<Vertex> members)
      : universe_(universe), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(static_cast<std::size_t>(universe), false);
    for (Vertex v : members_) {
      if (v < 0 || v >= universe)
        throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe));
      mask_[v] = true;
    }
  }

  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::vector<Vertex>(members)) {}

  static VertexSet from_mask(const std::vector<bool>& mask) {
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < mask.size(); ++v)
      if (mask[v]) members.push_back(static_cast<Vertex>(v));
    return VertexSet(static_cast<int>(mask.size()), std::move(members));
  }

  static VertexSet all(int universe) {
    std::vector<Vertex> members(static_cast<std::size_t>(universe));
    for (int v = 0; v < universe; ++v) members[v] = v;
    return VertexSet(universe, std::move(members));
  }

  static VertexSet none(int universe) { return VertexSet(universe, std::vector<Vertex>{}); }

  int universe_size() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  const std::vector<bool>& mask() const noexcept { return mask_; }
  bool contains(Vertex v) const { return v >= 0 && v < universe_ && mask_[v]; }

  VertexSet complement() const {
    std::vector<Vertex> rest;
    for (int v = 0; v < universe_; ++v)
      if (!mask_[v]) rest.push_back(v);
    return VertexSet(universe_, std::move(rest));
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::all_of(members_.begin(), members_.end(),
                       [&](Vertex v) { return other.contains(v); });
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }

 private:
  int universe_ = 0;
  std::vector<Vertex> members_;
  std::vector<bool> mask_;
};

inline void require_same_universe(const Digraph& d, const VertexSet& s) {
  if (s.universe_size() != d.order())
    throw PreconditionError("vertex set over universe " + std::to_string(s.universe_size()) +
                            " used with a digraph of order " + std::to_string(d.order()));
}

struct DegreeTable {
  int min_in = 0;
  int max_in = 0;
  int min_out = 0;
  int max_out = 0;
  std::vector<int> in;
  std::vector<int> out;
};

/// Extremes are all zero for the empty digraph.
inline DegreeTable degrees(const Digraph& d) {
  DegreeTable t;
  const int n = d.order();
  t.in.resize(static_cast<std::size_t>(n));
  t.out.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    t.in[v] = d.in_degree(v);
    t.out[v] = d.out_degree(v);
  }
  if (n > 0) {
    auto [in_lo, in_hi] = std::minmax_element(t.in.begin(), t.in.end());
    auto [out_lo, out_hi] = std::minmax_element(t.out.begin(), t.out.end());
    t.min_in = *in_lo;
    t.max_in = *in_hi;
    t.min_out = *out_lo;
    t.max_out = *out_hi;
  }
  return t;
}

inline Digraph converse(const Digraph& d) {
  std::vector<Arc> reversed;
  reversed.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) reversed.push_back({a.head, a.tail});
  return Digraph(d.order(), reversed);
}

/// Complete biorientation: every edge becomes a pair of opposite arcs.
inline Digraph bidirect(int n, std::span<const Edge> edges) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return Digraph(n, arcs);
}

inline bool is_symmetric(const Digraph& d) {
  return std::all_of(d.arcs().begin(), d.arcs().end(),
                     [&](const Arc& a) { return d.has_arc(a.head, a.tail); });
}

/// Underlying simple graph: orientation dropped, opposite pairs collapsed.
inline std::vector<std::vector<Vertex>> underlying_adjacency(const Digraph& d) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(d.order()));
  for (const Arc& a : d.arcs()) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

inline std::vector<Edge> underlying_edges(const Digraph& d) {
  std::vector<Edge> edges;
  for (const Arc& a : d.arcs()) {
    if (a.tail < a.head || !d.has_arc(a.head, a.tail))
      edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

/// Component label per vertex of the underlying graph, numbered by lowest
/// member id.
inline std::vector<int> components(const Digraph& d) {
  const auto adj = underlying_adjacency(d);
  std::vector<int> label(static_cast<std::size_t>(d.order()), -1);
  int next = 0;
  for (Vertex s = 0; s < d.order(); ++s) {
    if (label[s] != -1) continue;
    std::queue<Vertex> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : adj[v])
        if (label[w] == -1) {
          label[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return label;
}

/// Proper 2-coloring of the underlying graph, or nullopt if it has an odd
/// cycle. The lowest id of every component gets color 0.
inline std::optional<std::vector<int>> two_coloring(const Digraph& d) {
  const auto adj = underlying_adjacency(d);
  std::vector<int> color(static_cast<std::size_t>(d.order()), -1);
  for (Vertex s = 0; s < d.order(); ++s) {
    if (color[s] != -1) continue;
    std::queue<Vertex> q;
    q.push(s);
    color[s] = 0;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

struct ClassReport {
  bool connected = false;
  bool bipartite = false;
  bool functional = false;
  bool contrafunctional = false;
  bool rooted_tree = false;
  std::optional<Vertex> root;
  bool directed_tree = false;
  int source_count = 0;
  int sink_count = 0;
};

inline ClassReport classify(const Digraph& d) {
  ClassReport r;
  const int n = d.order();
  const auto comp = components(d);
  r.connected = n > 0 && std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
  r.bipartite = two_coloring(d).has_value();

  r.functional = true;
  r.contrafunctional = true;
  for (Vertex v = 0; v < n; ++v) {
    if (d.in_degree(v) == 0) ++r.source_count;
    if (d.out_degree(v) == 0) ++r.sink_count;
    if (d.out_degree(v) != 1) r.functional = false;
    if (d.in_degree(v) != 1) r.contrafunctional = false;
  }
  if (n == 0) r.functional = r.contrafunctional = false;

  r.directed_tree =
      r.connected && underlying_edges(d).size() == static_cast<std::size_t>(n - 1);

  if (r.connected && r.source_count == 1) {
    bool rest_single = true;
    Vertex root = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (d.in_degree(v) == 0) root = v;
      else if (d.in_degree(v) != 1) rest_single = false;
    }
    if (rest_single) {
      r.rooted_tree = true;
      r.root = root;
    }
  }
  return r;
}

namespace detail {

inline VertexSet closure(const Digraph& d, Vertex x, bool forward) {
  std::vector<bool> seen(static_cast<std::size_t>(d.order()), false);
  std::queue<Vertex> q;
  q.push(x);
  seen[x] = true;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : forward ? d.out_neighbors(v) : d.in_neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  return VertexSet::from_mask(seen);
}

}  // namespace detail

struct Reachability {
  VertexSet forward;   // vertices accessible from x, x included
  VertexSet backward;  // vertices from which x is accessible, x included
};

inline Reachability reachability(const Digraph& d, Vertex x) {
  if (!d.contains(x)) throw PreconditionError("vertex " + std::to_string(x) + " out of range");
  return {detail::closure(d, x, true), detail::closure(d, x, false)};
}

/// Number of arcs going from A to B.
inline std::size_t cut_size(const Digraph& d, const VertexSet& a, const VertexSet& b) {
  require_same_universe(d, a);
  require_same_universe(d, b);
  std::size_t count = 0;
  for (Vertex u : a.members())
    for (Vertex v : d.out_neighbors(u))
      if (b.contains(v)) ++count;
  return count;
}

}  // namespace goka
