#pragma once

// Exact cover by 3-sets (regular form: n elements, n triples, every element
// in exactly three triples) and its reduction to the k-alliance decision
// problem on bipartite digraphs.
//
// Vertex layout of the reduced digraph, n = number of elements:
//   [0, n)                        element vertices v_i
//   [n, 2n)                       set vertices u_j
//   [2n, 2n + n(k+2))             k+2 pendant sources per element, grouped by owner
//   [2n + n(k+2), 2n + n(2k+5))   k+3 pendant sources per set, grouped by owner
//
// An exact cover of n/3 triples exists iff the alliance number of the
// reduced digraph equals n/3 + n(2k+5).

#include <algorithm>
#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "goka/digraph.hpp"
#include "goka/digraph_io.hpp"
#include "goka/error.hpp"
#include "goka/families.hpp"
#include "goka/verify.hpp"

namespace goka {

using Triple = std::array<int, 3>;

struct Ec3sInstance {
  int n_elements = 0;
  std::vector<Triple> sets;

  bool operator==(const Ec3sInstance&) const = default;
};

inline CheckResult validate_ec3s(const Ec3sInstance& inst) {
  CheckResult res;
  const int n = inst.n_elements;
  if (n <= 0 || n % 3 != 0) res.fail("element count " + std::to_string(n) + " is not a positive multiple of 3");
  if (static_cast<int>(inst.sets.size()) != n)
    res.fail("expected " + std::to_string(n) + " sets, got " + std::to_string(inst.sets.size()));
  std::vector<int> occurrences(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (std::size_t j = 0; j < inst.sets.size(); ++j) {
    const Triple& t = inst.sets[j];
    bool in_range = true;
    for (int e : t)
      if (e < 0 || e >= n) in_range = false;
    if (!in_range) {
      res.fail("set " + std::to_string(j) + " has an element outside [0," + std::to_string(n) + ")");
      continue;
    }
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) res.fail("set " + std::to_string(j) + " repeats an element");
    for (int e : t) ++occurrences[e];
  }
  for (int e = 0; e < n; ++e)
    if (occurrences[e] != 3)
      res.fail("element " + std::to_string(e) + " occurs in " + std::to_string(occurrences[e]) + " sets, expected 3");
  return res;
}

/// The three copies of {0, 1, 2}: the only regular instance with n = 3.
inline Ec3sInstance smallest_ec3s() { return {3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}}; }

struct ReductionOutput {
  Ec3sInstance instance;
  Digraph digraph;
  VertexSet v_vertices;
  VertexSet u_vertices;
  std::vector<std::vector<Vertex>> pendant_map;  // core vertex id -> its pendant sources
  int k = 0;
  long long target = 0;                           // n/3 + n(2k+5)
};

inline ReductionOutput reduce_ec3s(const Ec3sInstance& inst, int k) {
  if (auto check = validate_ec3s(inst); !check)
    throw PreconditionError("invalid EC3S instance: " + check.reasons.front());
  if (k < 0) throw PreconditionError("reduction needs k >= 0");
  const int n = inst.n_elements;
  const int total = 2 * n + n * (k + 2) + n * (k + 3);

  ReductionOutput out;
  out.instance = inst;
  out.k = k;
  out.target = n / 3 + static_cast<long long>(n) * (2 * k + 5);
  out.pendant_map.assign(static_cast<std::size_t>(2 * n), {});

  std::vector<Arc> arcs;
  for (int j = 0; j < n; ++j)
    for (int e : inst.sets[j]) {
      arcs.push_back({e, n + j});
      arcs.push_back({n + j, e});
    }
  Vertex next = 2 * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k + 2; ++j) {
      arcs.push_back({next, i});
      out.pendant_map[i].push_back(next++);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k + 3; ++j) {
      arcs.push_back({next, n + i});
      out.pendant_map[n + i].push_back(next++);
    }
  out.digraph = Digraph(total, arcs);

  std::vector<Vertex> vs, us;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    us.push_back(n + i);
  }
  out.v_vertices = VertexSet(total, vs);
  out.u_vertices = VertexSet(total, us);
  return out;
}

/// True iff the listed set ids cover every element exactly once.
inline bool is_exact_cover(const Ec3sInstance& inst, const std::vector<int>& cover) {
  std::vector<int> hits(static_cast<std::size_t>(inst.n_elements), 0);
  std::vector<int> ids = cover;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  for (int j : ids) {
    if (j < 0 || j >= static_cast<int>(inst.sets.size())) return false;
    for (int e : inst.sets[j]) ++hits[e];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

/// Cover sets' u-vertices plus every pendant source.
inline VertexSet cover_to_alliance(const ReductionOutput& out, const std::vector<int>& cover) {
  const int n = out.instance.n_elements;
  if (static_cast<int>(cover.size()) != n / 3 || !is_exact_cover(out.instance, cover))
    throw PreconditionError("cover is not an exact cover of size n/3");
  std::vector<Vertex> members;
  for (int j : cover) members.push_back(n + j);
  for (const auto& pendants : out.pendant_map) members.insert(members.end(), pendants.begin(), pendants.end());
  return VertexSet(out.digraph.order(), members);
}

/// Set ids of the u-vertices in a certified alliance of size exactly target.
inline std::vector<int> alliance_to_cover(const ReductionOutput& out, const VertexSet& s) {
  if (static_cast<long long>(s.size()) != out.target)
    throw PreconditionError("alliance size " + std::to_string(s.size()) + " differs from target " +
                            std::to_string(out.target));
  if (!verify_goka(out.digraph, s, out.k).is_goka)
    throw PreconditionError("vertex set is not a global offensive k-alliance of the reduced digraph");
  const int n = out.instance.n_elements;
  std::vector<int> cover;
  for (Vertex u : out.u_vertices.members())
    if (s.contains(u)) cover.push_back(u - n);
  if (!is_exact_cover(out.instance, cover))
    throw Error("extracted sets do not form an exact cover");
  return cover;
}

/// Exhaustive search over all n/3-subsets of the collection; lowest ids first.
inline std::optional<std::vector<int>> find_exact_cover(const Ec3sInstance& inst) {
  const int m = static_cast<int>(inst.sets.size());
  const int want = inst.n_elements / 3;
  if (want > m) return std::nullopt;
  std::vector<int> idx(static_cast<std::size_t>(want));
  for (int i = 0; i < want; ++i) idx[i] = i;
  for (;;) {
    if (is_exact_cover(inst, idx)) return idx;
    int i = want - 1;
    while (i >= 0 && idx[i] == m - want + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Every regular instance on n elements, as multisets of triples drawn from
/// the lexicographically ordered list of all triples, in lexicographic order.
inline std::vector<Ec3sInstance> regular_ec3s_instances(int n) {
  if (n <= 0 || n % 3 != 0) throw PreconditionError("element count must be a positive multiple of 3");
  if (n > 6) throw PreconditionError("exhaustive enumeration is limited to n <= 6");
  std::vector<Triple> triples;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  const int t = static_cast<int>(triples.size());

  std::vector<Ec3sInstance> found;
  std::vector<int> load(static_cast<std::size_t>(n), 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      Ec3sInstance inst{n, {}};
      for (int i : chosen) inst.sets.push_back(triples[i]);
      found.push_back(std::move(inst));
      return;
    }
    for (int i = from; i < t; ++i) {
      const Triple& tr = triples[i];
      if (load[tr[0]] == 3 || load[tr[1]] == 3 || load[tr[2]] == 3) continue;
      for (int e : tr) ++load[e];
      chosen.push_back(i);
      self(self, i);
      chosen.pop_back();
      for (int e : tr) --load[e];
    }
  };
  rec(rec, 0);
  return found;
}

/// First regular instance (in enumeration order) with or without an exact
/// cover.
inline std::optional<Ec3sInstance> find_regular_ec3s(int n, bool with_cover) {
  for (auto& inst : regular_ec3s_instances(n))
    if (find_exact_cover(inst).has_value() == with_cover) return inst;
  return std::nullopt;
}

// Text format: line 1 `n`; then n lines of three element ids. '#' comments.

inline Ec3sInstance read_ec3s(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string_view> toks;
  if (!reader.next(toks)) throw ParseError(reader.line(), "missing element count");
  if (toks.size() != 1) throw ParseError(reader.line(), "first line must be the element count");
  Ec3sInstance inst;
  inst.n_elements = detail::parse_count(toks[0], reader.line(), "element count");
  while (reader.next(toks)) {
    if (static_cast<int>(inst.sets.size()) == inst.n_elements)
      throw ParseError(reader.line(), "more than " + std::to_string(inst.n_elements) + " set lines");
    if (toks.size() != 3) throw ParseError(reader.line(), "set line must hold exactly 3 element ids");
    Triple t{};
    for (int i = 0; i < 3; ++i) {
      long long e = detail::parse_integer(toks[i], reader.line());
      if (e < 0 || e >= inst.n_elements) throw ParseError(reader.line(), "element id out of range");
      t[i] = static_cast<int>(e);
    }
    inst.sets.push_back(t);
  }
  if (static_cast<int>(inst.sets.size()) != inst.n_elements)
    throw ParseError(reader.line(), "expected " + std::to_string(inst.n_elements) + " set lines, found " +
                                        std::to_string(inst.sets.size()));
  return inst;
}

inline void write_ec3s(std::ostream& out, const Ec3sInstance& inst) {
  out << inst.n_elements << '\n';
  for (const Triple& t : inst.sets) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace goka
