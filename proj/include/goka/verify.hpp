#pragma once

// Dominating-set and global offensive k-alliance checks with a per-vertex
// audit.
//
// S is a global offensive k-alliance of D when every vertex outside S has an
// in-neighbor in S and, for every v outside S,
//
//     deg_S^-(v) >= deg_{V-S}^-(v) + k.
//
// Any integer k is accepted; the certificate records whether k lies in the
// customary interval {2 - maxindeg, ..., maxindeg}.

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goka/digraph.hpp"

namespace goka {

enum class ViolationReason { not_dominated, margin };

inline std::string_view to_string(ViolationReason r) {
  return r == ViolationReason::not_dominated ? "not-dominated" : "margin";
}

struct Violation {
  Vertex vertex = 0;
  int in_from_set = 0;         // deg_S^-(v)
  int in_from_complement = 0;  // deg_{V-S}^-(v)
  ViolationReason reason = ViolationReason::margin;

  bool operator==(const Violation&) const = default;
};

struct AllianceCertificate {
  int k = 0;
  VertexSet set;
  bool is_dominating = false;
  bool is_goka = false;
  std::vector<Violation> violations;  // every failing vertex, ascending id
  bool k_in_studied_range = false;
};

namespace detail {

constexpr long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// Smallest number of in-neighbors from S a vertex of the given in-degree
/// needs to stay outside a k-alliance: 2*deg_S >= indeg + k, and at least 1.
constexpr int outside_threshold(int in_degree, int k) {
  return static_cast<int>(std::max<long long>(1, ceil_div(in_degree + static_cast<long long>(k), 2)));
}

inline int in_from(const Digraph& d, const VertexSet& s, Vertex v) {
  auto in = d.in_neighbors(v);
  return static_cast<int>(std::count_if(in.begin(), in.end(), [&](Vertex u) { return s.contains(u); }));
}

}  // namespace detail

inline bool k_in_studied_range(const Digraph& d, int k) {
  const int max_in = degrees(d).max_in;
  return k >= 2 - max_in && k <= max_in;
}

inline bool is_dominating(const Digraph& d, const VertexSet& s) {
  require_same_universe(d, s);
  for (Vertex v = 0; v < d.order(); ++v)
    if (!s.contains(v) && detail::in_from(d, s, v) == 0) return false;
  return true;
}

inline AllianceCertificate verify_goka(const Digraph& d, const VertexSet& s, int k) {
  require_same_universe(d, s);
  AllianceCertificate cert;
  cert.k = k;
  cert.set = s;
  cert.k_in_studied_range = k_in_studied_range(d, k);
  cert.is_dominating = true;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (s.contains(v)) continue;
    const int inside = detail::in_from(d, s, v);
    const int outside = d.in_degree(v) - inside;
    if (inside == 0) {
      cert.is_dominating = false;
      cert.violations.push_back({v, inside, outside, ViolationReason::not_dominated});
    } else if (inside < outside + k) {
      cert.violations.push_back({v, inside, outside, ViolationReason::margin});
    }
  }
  cert.is_goka = cert.violations.empty();
  return cert;
}

/// Graph version on undirected closed neighborhoods: N[S] = V and
/// |N(v) & S| >= |N(v) - S| + k for v outside S.
inline bool verify_goka_undirected(int n, std::span<const Edge> edges, const VertexSet& s, int k) {
  if (s.universe_size() != n) throw PreconditionError("vertex set universe does not match graph order");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw GraphError("edge " + arc_name(u, v) + " is not a simple-graph edge on " + std::to_string(n) + " vertices");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    auto& nb = adj[v];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    const auto inside = std::count_if(nb.begin(), nb.end(), [&](Vertex u) { return s.contains(u); });
    const auto outside = static_cast<long long>(nb.size()) - inside;
    if (inside == 0 || inside < outside + k) return false;
  }
  return true;
}

}  // namespace goka
