#pragma once

// Exact and heuristic computation of the global offensive k-alliance number
// and the domination number.
//
// Both objectives reduce to one per-vertex requirement: a vertex v may stay
// outside S only if at least threshold(v) of its in-neighbors are in S.
// For domination threshold(v) = 1; for k-alliances
// threshold(v) = max(1, ceil((indeg(v) + k) / 2)). Vertices whose threshold
// exceeds their in-degree belong to every solution.
//
// Ties are broken towards the lexicographically least witness everywhere.

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "goka/bounds.hpp"
#include "goka/digraph.hpp"
#include "goka/error.hpp"
#include "goka/verify.hpp"

namespace goka {

enum class Method { exact, naive, greedy };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::naive: return "naive";
    case Method::greedy: return "greedy";
  }
  return "?";
}

enum class Objective { alliance, domination };

struct SolveResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  VertexSet forced_prefix;  // vertices contained in every solution
  Method method = Method::exact;
  bool optimal = false;     // false for greedy runs and for timed-out searches
};

using TimeLimit = std::optional<std::chrono::duration<double>>;

namespace detail {

inline std::vector<int> thresholds(const Digraph& d, Objective obj, int k) {
  std::vector<int> th(static_cast<std::size_t>(d.order()));
  for (Vertex v = 0; v < d.order(); ++v)
    th[v] = obj == Objective::domination ? 1 : outside_threshold(d.in_degree(v), k);
  return th;
}

inline VertexSet forced_vertices(const Digraph& d, const std::vector<int>& th) {
  std::vector<Vertex> forced;
  for (Vertex v = 0; v < d.order(); ++v)
    if (th[v] > d.in_degree(v)) forced.push_back(v);
  return VertexSet(d.order(), std::move(forced));
}

inline void require_nonempty(const Digraph& d) {
  if (d.order() < 1) throw PreconditionError("solver needs at least one vertex");
}

inline SolveResult greedy(const Digraph& d, const std::vector<int>& th) {
  const int n = d.order();
  SolveResult r;
  r.method = Method::greedy;
  r.forced_prefix = forced_vertices(d, th);

  std::vector<bool> in(static_cast<std::size_t>(n), false);
  std::vector<int> cnt_in(static_cast<std::size_t>(n), 0);
  auto add = [&](Vertex v) {
    in[v] = true;
    for (Vertex w : d.out_neighbors(v)) ++cnt_in[w];
  };
  for (Vertex v : r.forced_prefix.members()) add(v);

  auto unsatisfied = [&](Vertex v) { return !in[v] && cnt_in[v] < th[v]; };
  for (;;) {
    ++r.nodes_explored;
    Vertex best = -1;
    int best_fixes = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (in[u]) continue;
      int fixes = unsatisfied(u) ? 1 : 0;
      for (Vertex w : d.out_neighbors(u))
        if (unsatisfied(w) && cnt_in[w] + 1 >= th[w]) ++fixes;
      if (fixes > best_fixes) {
        best_fixes = fixes;
        best = u;
      }
    }
    // A violated vertex can always fix itself, so best == -1 means done.
    if (best == -1) break;
    add(best);
  }
  r.witness = VertexSet::from_mask(in);
  r.value = static_cast<int>(r.witness.size());
  return r;
}

class BranchAndBound {
 public:
  using Clock = std::chrono::steady_clock;

  BranchAndBound(const Digraph& d, std::vector<int> th, TimeLimit limit)
      : d_(d), th_(std::move(th)), n_(d.order()) {
    if (limit) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*limit);
  }

  SolveResult run(const SolveResult& incumbent, std::optional<long long> global_lower) {
    SolveResult r;
    r.method = Method::exact;
    r.forced_prefix = forced_vertices(d_, th_);
    global_lower_ = global_lower.value_or(0);

    state_.assign(static_cast<std::size_t>(n_), kUndecided);
    cnt_in_.assign(static_cast<std::size_t>(n_), 0);
    cnt_und_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) cnt_und_[v] = d_.in_degree(v);
    unsatisfied_ = n_;
    size_ = 0;
    for (Vertex v : r.forced_prefix.members()) include(v);
    for (Vertex v = 0; v < n_; ++v)
      if (!r.forced_prefix.contains(v)) order_.push_back(v);

    // Accept only strictly smaller sets than the heuristic incumbent, plus
    // one, so the first optimum met in include-first order is kept.
    best_size_ = incumbent.value + 1;
    search(0);

    r.nodes_explored = nodes_;
    r.optimal = !timed_out_;
    r.witness = found_ ? VertexSet(n_, best_) : incumbent.witness;
    r.value = static_cast<int>(r.witness.size());
    return r;
  }

 private:
  static constexpr char kUndecided = 0;
  static constexpr char kIn = 1;
  static constexpr char kOut = 2;

  void include(Vertex v) {
    state_[v] = kIn;
    ++size_;
    if (cnt_in_[v] < th_[v]) --unsatisfied_;
    for (Vertex w : d_.out_neighbors(v)) {
      --cnt_und_[w];
      ++cnt_in_[w];
      if (state_[w] != kIn && cnt_in_[w] == th_[w]) --unsatisfied_;
    }
  }

  void undo_include(Vertex v) {
    for (Vertex w : d_.out_neighbors(v)) {
      if (state_[w] != kIn && cnt_in_[w] == th_[w]) ++unsatisfied_;
      --cnt_in_[w];
      ++cnt_und_[w];
    }
    state_[v] = kUndecided;
    --size_;
    if (cnt_in_[v] < th_[v]) ++unsatisfied_;
  }

  bool recoverable(Vertex v) const { return cnt_in_[v] + cnt_und_[v] >= th_[v]; }

  /// Returns false when an excluded vertex can no longer reach its threshold.
  bool exclude(Vertex v) {
    state_[v] = kOut;
    bool alive = recoverable(v);
    for (Vertex w : d_.out_neighbors(v)) {
      --cnt_und_[w];
      if (state_[w] == kOut && !recoverable(w)) alive = false;
    }
    return alive;
  }

  void undo_exclude(Vertex v) {
    for (Vertex w : d_.out_neighbors(v)) ++cnt_und_[w];
    state_[v] = kUndecided;
  }

  /// Counting bound on how many more vertices the subtree needs: every
  /// excluded vertex short of its threshold must be fed by newly included
  /// undecided vertices, each of which feeds a bounded number of them.
  long long residual_lower_bound(std::size_t idx) const {
    long long max_deficit = 0;
    long long total_deficit = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (state_[v] != kOut) continue;
      const long long def = th_[v] - cnt_in_[v];
      if (def > 0) {
        max_deficit = std::max(max_deficit, def);
        total_deficit += def;
      }
    }
    if (total_deficit == 0) return 1;
    long long max_feed = 0;
    for (std::size_t i = idx; i < order_.size(); ++i) {
      long long feed = 0;
      for (Vertex w : d_.out_neighbors(order_[i]))
        if (state_[w] == kOut && cnt_in_[w] < th_[w]) ++feed;
      max_feed = std::max(max_feed, feed);
    }
    if (max_feed == 0) return static_cast<long long>(n_) + 1;
    return std::max({1LL, max_deficit, ceil_div(total_deficit, max_feed)});
  }

  void search(std::size_t idx) {
    if (stop_) return;
    ++nodes_;
    if (deadline_ && (nodes_ & 0x3ff) == 0 && Clock::now() > *deadline_) {
      timed_out_ = stop_ = true;
      return;
    }
    if (unsatisfied_ == 0) {
      // Leaving every undecided vertex out is feasible: this is the unique
      // smallest set in the subtree.
      if (size_ < best_size_) {
        best_size_ = size_;
        found_ = true;
        best_.clear();
        for (Vertex v = 0; v < n_; ++v)
          if (state_[v] == kIn) best_.push_back(v);
        if (best_size_ <= global_lower_) stop_ = true;
      }
      return;
    }
    if (idx == order_.size()) return;
    if (size_ + residual_lower_bound(idx) >= best_size_) return;

    const Vertex v = order_[idx];
    include(v);
    search(idx + 1);
    undo_include(v);
    if (stop_) return;
    if (exclude(v)) search(idx + 1);
    undo_exclude(v);
  }

  const Digraph& d_;
  std::vector<int> th_;
  int n_;
  std::optional<Clock::time_point> deadline_;

  std::vector<char> state_;
  std::vector<int> cnt_in_;
  std::vector<int> cnt_und_;
  std::vector<Vertex> order_;
  int unsatisfied_ = 0;
  long long size_ = 0;

  long long best_size_ = 0;
  std::vector<Vertex> best_;
  bool found_ = false;
  long long global_lower_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  bool stop_ = false;
};

inline SolveResult exact(const Digraph& d, Objective obj, int k, TimeLimit limit) {
  require_nonempty(d);
  auto th = thresholds(d, obj, k);
  const SolveResult incumbent = greedy(d, th);
  std::optional<long long> lower;
  if (obj == Objective::alliance)
    if (auto r = degree_ratio_lower_bound(d, k)) lower = round_up(*r);
  BranchAndBound bb(d, std::move(th), limit);
  return bb.run(incumbent, lower);
}

/// Exhaustive scan in cardinality order, lexicographic within a cardinality,
/// checking the definition directly on bitmasks.
inline SolveResult naive(const Digraph& d, Objective obj, int k) {
  require_nonempty(d);
  const int n = d.order();
  if (n > 24) throw PreconditionError("naive oracle refuses digraphs with more than 24 vertices");
  std::vector<std::uint32_t> in_mask(static_cast<std::size_t>(n), 0);
  for (const Arc& a : d.arcs()) in_mask[a.head] |= 1u << a.tail;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

  auto qualifies = [&](std::uint32_t s) {
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1u) continue;
      const int inside = std::popcount(in_mask[v] & s);
      const int outside = std::popcount(in_mask[v] & ~s & full);
      if (inside < 1) return false;
      if (obj == Objective::alliance && inside < outside + k) return false;
    }
    return true;
  };

  SolveResult r;
  r.method = Method::naive;
  r.optimal = true;
  r.forced_prefix = forced_vertices(d, thresholds(d, obj, k));
  for (int c = 0; c <= n; ++c) {
    std::vector<int> idx(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) idx[i] = i;
    for (;;) {
      std::uint32_t s = 0;
      for (int i : idx) s |= 1u << i;
      ++r.nodes_explored;
      if (qualifies(s)) {
        r.witness = VertexSet(n, std::vector<Vertex>(idx.begin(), idx.end()));
        r.value = c;
        return r;
      }
      int i = c - 1;
      while (i >= 0 && idx[i] == n - c + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error("naive scan found no solution; the full vertex set should always qualify");
}

}  // namespace detail

/// Minimum global offensive k-alliance by branch and bound. With a time
/// limit the best set found so far is returned with optimal = false.
inline SolveResult min_goka_exact(const Digraph& d, int k, TimeLimit limit = std::nullopt) {
  return detail::exact(d, Objective::alliance, k, limit);
}

inline SolveResult min_dominating_exact(const Digraph& d, TimeLimit limit = std::nullopt) {
  return detail::exact(d, Objective::domination, 0, limit);
}

/// Testing oracle; refuses n > 24.
inline SolveResult min_goka_naive(const Digraph& d, int k) {
  return detail::naive(d, Objective::alliance, k);
}

inline SolveResult min_dominating_naive(const Digraph& d) {
  return detail::naive(d, Objective::domination, 0);
}

/// Starts from the forced vertices and repeatedly adds the vertex that
/// repairs the most violated vertices, lowest id on ties.
inline SolveResult greedy_goka(const Digraph& d, int k) {
  detail::require_nonempty(d);
  return detail::greedy(d, detail::thresholds(d, Objective::alliance, k));
}

inline SolveResult greedy_dominating(const Digraph& d) {
  detail::require_nonempty(d);
  return detail::greedy(d, detail::thresholds(d, Objective::domination, 0));
}

inline SolveResult solve(const Digraph& d, Objective obj, int k, Method method,
                         TimeLimit limit = std::nullopt) {
  switch (method) {
    case Method::exact: return detail::exact(d, obj, k, limit);
    case Method::naive: return detail::naive(d, obj, k);
    case Method::greedy:
      detail::require_nonempty(d);
      return detail::greedy(d, detail::thresholds(d, obj, k));
  }
  throw PreconditionError("unknown method");
}

}  // namespace goka
