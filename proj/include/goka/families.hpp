#pragma once

// Extremal and structural digraph families, plus the constructive
// offensive 1-alliance for connected functional digraphs.

#include <algorithm>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goka/digraph.hpp"
#include "goka/error.hpp"

namespace goka {

struct CheckResult {
  bool ok = true;
  std::vector<std::string> reasons;

  explicit operator bool() const noexcept { return ok; }

  void fail(std::string why) {
    ok = false;
    reasons.push_back(std::move(why));
  }
};

// ---------------------------------------------------------------------------
// Lower-bound extremal family

/// Decomposition certifying that a digraph attains the degree-ratio lower
/// bound at k = 1. `u_part` is the alliance; `base` is the digraph with the
/// u -> v_part arcs removed.
struct ExtremalWitness {
  VertexSet v_part;
  VertexSet u_part;
  int r_prime = 0;
  int r = 0;
  Digraph base;
};

struct ExtremalInstance {
  Digraph digraph;
  ExtremalWitness witness;
};

inline Digraph remove_arcs_from_to(const Digraph& d, const VertexSet& from, const VertexSet& to) {
  std::vector<Arc> kept;
  for (const Arc& a : d.arcs())
    if (!(from.contains(a.tail) && to.contains(a.head))) kept.push_back(a);
  return Digraph(d.order(), kept);
}

/// Bidirected cycle v_0..v_{t-1} (ids 0..t-1) plus u_0, u_1, u_2 (ids t..t+2).
/// Every u points to every cycle vertex and v_0..v_4 point to every u.
inline ExtremalInstance extremal_cycle_example(int t) {
  if (t < 5) throw PreconditionError("cycle example needs t >= 5, got " + std::to_string(t));
  std::vector<Arc> arcs;
  for (int i = 0; i < t; ++i) {
    arcs.push_back({i, (i + 1) % t});
    arcs.push_back({(i + 1) % t, i});
  }
  for (int u = t; u < t + 3; ++u) {
    for (int j = 0; j < t; ++j) arcs.push_back({u, j});
    for (int j = 0; j < 5; ++j) arcs.push_back({j, u});
  }
  ExtremalInstance inst;
  inst.digraph = Digraph(t + 3, arcs);
  std::vector<Vertex> vs(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) vs[i] = i;
  inst.witness.v_part = VertexSet(t + 3, vs);
  inst.witness.u_part = VertexSet(t + 3, {t, t + 1, t + 2});
  inst.witness.r_prime = 2;
  inst.witness.r = t;
  inst.witness.base = remove_arcs_from_to(inst.digraph, inst.witness.u_part, inst.witness.v_part);
  return inst;
}

/// Checks the three defining conditions of the family and the regular
/// distribution of u -> v arcs (each u sends r, each v receives r' + 1).
inline CheckResult certify_extremal(const Digraph& d, const ExtremalWitness& w) {
  CheckResult res;
  const int n = d.order();
  if (w.v_part.universe_size() != n || w.u_part.universe_size() != n) {
    res.fail("witness universe does not match the digraph");
    return res;
  }
  if (w.v_part.empty() || w.u_part.empty()) res.fail("both parts must be non-empty");
  for (Vertex x = 0; x < n; ++x)
    if (w.v_part.contains(x) == w.u_part.contains(x)) {
      res.fail("parts do not partition the vertex set at vertex " + std::to_string(x));
      break;
    }
  if (w.r_prime < 0) res.fail("r' must be non-negative");
  if (!res) return res;

  const Digraph base = remove_arcs_from_to(d, w.u_part, w.v_part);
  if (!(w.base == base)) res.fail("base digraph is not D minus the u -> v arcs");

  const long long np = static_cast<long long>(w.v_part.size());
  const long long p = static_cast<long long>(w.u_part.size());
  const long long incoming = w.r_prime + 1LL;

  // (i)
  if ((incoming * np) % p != 0) {
    res.fail("(i) (r'+1) n' is not divisible by p");
  } else {
    if (w.r != incoming * np / p) res.fail("(i) r differs from (r'+1) n' / p");
    for (Vertex v : w.v_part.members())
      if (base.out_degree(v) > w.r) {
        res.fail("(i) out-degree of " + std::to_string(v) + " in the base exceeds r");
        break;
      }
  }
  // (ii)
  for (Vertex v : w.v_part.members()) {
    auto in = base.in_neighbors(v);
    const auto inside = std::count_if(in.begin(), in.end(), [&](Vertex x) { return w.v_part.contains(x); });
    if (inside != w.r_prime) {
      res.fail("(ii) in-degree of " + std::to_string(v) + " inside the v-part is " +
               std::to_string(inside) + ", expected r' = " + std::to_string(w.r_prime));
      break;
    }
  }
  // (iii)
  for (Vertex u : w.u_part.members()) {
    if (base.out_degree(u) != 0) {
      res.fail("(iii) u-vertex " + std::to_string(u) + " has out-arcs outside the v-part");
      break;
    }
    if (base.in_degree(u) < 2 * w.r_prime + 1) {
      res.fail("(iii) in-degree of u-vertex " + std::to_string(u) + " is below 2r'+1");
      break;
    }
  }
  // regular u -> v distribution
  for (Vertex u : w.u_part.members()) {
    auto out = d.out_neighbors(u);
    const auto to_v = std::count_if(out.begin(), out.end(), [&](Vertex x) { return w.v_part.contains(x); });
    if (to_v != w.r) {
      res.fail("u-vertex " + std::to_string(u) + " sends " + std::to_string(to_v) + " arcs, expected r");
      break;
    }
  }
  for (Vertex v : w.v_part.members()) {
    auto in = d.in_neighbors(v);
    const auto from_u = std::count_if(in.begin(), in.end(), [&](Vertex x) { return w.u_part.contains(x); });
    if (from_u != incoming) {
      res.fail("v-vertex " + std::to_string(v) + " receives " + std::to_string(from_u) +
               " arcs from the u-part, expected r'+1");
      break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Sharpness and gap families

/// Complete biorientation of K_{p,p} (x_i = i, y_j = p + j) with the
/// k x k block between x_0..x_{k-1} and y_0..y_{k-1} removed.
inline Digraph bipartite_sharpness(int k, int p) {
  if (k < 1 || p < k || p > 2 * k - 1)
    throw PreconditionError("bipartite sharpness needs 1 <= k <= p <= 2k-1, got k=" +
                            std::to_string(k) + " p=" + std::to_string(p));
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i >= k || j >= k) edges.emplace_back(i, p + j);
  return bidirect(2 * p, edges);
}

/// Directed cycle y_0..y_{t-1} (ids 0..t-1); for each i a directed path of
/// 2 * half_lengths[i] + 1 vertices ending in an arc to y_i. Paths take
/// consecutive ids after the cycle.
inline Digraph functional_sharpness(int t, std::span<const int> half_lengths) {
  if (t < 2) throw PreconditionError("cycle length must be at least 2 (a 1-cycle is a loop)");
  if (static_cast<int>(half_lengths.size()) != t)
    throw PreconditionError("expected " + std::to_string(t) + " path half-lengths");
  std::vector<Arc> arcs;
  for (int i = 0; i < t; ++i) arcs.push_back({i, (i + 1) % t});
  int next = t;
  for (int i = 0; i < t; ++i) {
    if (half_lengths[i] < 0) throw PreconditionError("path half-lengths must be non-negative");
    const int len = 2 * half_lengths[i] + 1;
    for (int j = 0; j + 1 < len; ++j) arcs.push_back({next + j, next + j + 1});
    arcs.push_back({next + len - 1, i});
    next += len;
  }
  return Digraph(next, arcs);
}

/// Directed cycle v_0..v_{2b-1} with a pendant source v'_i = 2b + i -> v_i.
inline Digraph gap_cycle(int b) {
  if (b < 1) throw PreconditionError("gap family needs b >= 1");
  const int c = 2 * b;
  std::vector<Arc> arcs;
  for (int i = 0; i < c; ++i) {
    arcs.push_back({i, (i + 1) % c});
    arcs.push_back({c + i, i});
  }
  return Digraph(2 * c, arcs);
}

/// gap_cycle(b) without the arc v_{2b-1} -> v_0.
inline Digraph gap_tree(int b) {
  const Digraph d = gap_cycle(b);
  const int c = 2 * b;
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (!(a.tail == c - 1 && a.head == 0)) arcs.push_back(a);
  return Digraph(d.order(), arcs);
}

// ---------------------------------------------------------------------------
// Connected functional digraphs

/// The unique cycle of a connected functional digraph, found by walking out
/// pointers from `start`; rotated to begin at its lowest id.
inline std::vector<Vertex> functional_cycle(const Digraph& d, Vertex start = 0) {
  Vertex x = start;
  for (int i = 0; i < d.order(); ++i) x = d.out_neighbors(x)[0];
  std::vector<Vertex> cycle{x};
  for (Vertex y = d.out_neighbors(x)[0]; y != x; y = d.out_neighbors(y)[0]) cycle.push_back(y);
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

enum class TerminalCase { cycle, height_one_empty, height_one_paths };

inline std::string_view to_string(TerminalCase c) {
  switch (c) {
    case TerminalCase::cycle: return "cycle";
    case TerminalCase::height_one_empty: return "height-one-empty";
    case TerminalCase::height_one_paths: return "height-one-paths";
  }
  return "?";
}

struct PeelStep {
  Vertex source = 0;  // deepest remaining vertex
  Vertex hub = 0;     // its out-neighbor, joins the alliance
  VertexSet removed;  // closed in-neighborhood of hub in the remainder
};

struct FunctionalDecomposition {
  std::vector<Vertex> cycle;
  VertexSet sources;
  std::vector<PeelStep> peel_steps;
  VertexSet remainder;
  TerminalCase terminal = TerminalCase::cycle;
  VertexSet alliance;
};

/// Builds an offensive 1-alliance of size at most floor((n + q + 1) / 2) in a
/// connected functional digraph with q sources.
///
/// Sources go into the alliance. Then, while the remainder has height >= 2,
/// the deepest remaining vertex (lowest id on ties) is taken, its
/// out-neighbor joins the alliance, and that out-neighbor's closed
/// in-neighborhood is removed. The height <= 1 remainder is finished by
/// alternating around a bare cycle, or by taking every cycle vertex that
/// still has a pendant plus every second vertex of the pendant-free cycle
/// stretches.
inline FunctionalDecomposition functional_alliance(const Digraph& d) {
  const ClassReport cls = classify(d);
  if (!cls.connected || !cls.functional)
    throw PreconditionError("functional alliance construction needs a connected functional digraph");
  const int n = d.order();
  auto succ = [&](Vertex v) { return d.out_neighbors(v)[0]; };

  FunctionalDecomposition out;
  out.cycle = functional_cycle(d);
  std::vector<bool> on_cycle(static_cast<std::size_t>(n), false);
  for (Vertex v : out.cycle) on_cycle[v] = true;

  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::queue<Vertex> q;
  for (Vertex v : out.cycle) {
    dist[v] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : d.in_neighbors(v))
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }

  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<bool> in_alliance(static_cast<std::size_t>(n), false);
  std::vector<Vertex> sources;
  for (Vertex v = 0; v < n; ++v)
    if (d.in_degree(v) == 0) {
      sources.push_back(v);
      alive[v] = false;
      in_alliance[v] = true;
    }
  out.sources = VertexSet(n, sources);

  for (;;) {
    int height = 0;
    Vertex deepest = -1;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && dist[v] > height) {
        height = dist[v];
        deepest = v;
      }
    if (height <= 1) break;
    const Vertex hub = succ(deepest);
    std::vector<Vertex> removed{hub};
    for (Vertex w : d.in_neighbors(hub))
      if (alive[w]) removed.push_back(w);
    for (Vertex w : removed) alive[w] = false;
    in_alliance[hub] = true;
    out.peel_steps.push_back({deepest, hub, VertexSet(n, removed)});
  }
  out.remainder = VertexSet::from_mask(alive);

  const std::size_t c = out.cycle.size();
  std::vector<bool> has_pendant(c, false);
  bool any_pendant = false;
  for (std::size_t i = 0; i < c; ++i)
    for (Vertex w : d.in_neighbors(out.cycle[i]))
      if (alive[w] && !on_cycle[w]) {
        has_pendant[i] = true;
        any_pendant = true;
      }

  if (!any_pendant) {
    out.terminal = TerminalCase::cycle;
    for (std::size_t i = 0; i < c; i += 2) in_alliance[out.cycle[i]] = true;
  } else if (std::all_of(has_pendant.begin(), has_pendant.end(), [](bool b) { return b; })) {
    out.terminal = TerminalCase::height_one_empty;
    for (Vertex v : out.cycle) in_alliance[v] = true;
  } else {
    out.terminal = TerminalCase::height_one_paths;
    // Start just after some pendant-holding cycle vertex so every stretch is
    // walked from its first vertex.
    std::size_t start = 0;
    while (!has_pendant[start]) ++start;
    int position = 0;
    for (std::size_t step = 1; step <= c; ++step) {
      const std::size_t i = (start + step) % c;
      if (has_pendant[i]) {
        in_alliance[out.cycle[i]] = true;
        position = 0;
      } else if (++position % 2 == 0) {
        in_alliance[out.cycle[i]] = true;
      }
    }
  }
  out.alliance = VertexSet::from_mask(in_alliance);
  return out;
}

}  // namespace goka
