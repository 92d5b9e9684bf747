#pragma once

// Desk-scale acceptance checks. Each criterion runs its instances, compares
// against exact values with zero tolerance, and enforces a wall-clock budget.
// Used by the acceptance test binary and by `goka selftest`.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "goka/bounds.hpp"
#include "goka/digraph.hpp"
#include "goka/ec3s.hpp"
#include "goka/families.hpp"
#include "goka/random.hpp"
#include "goka/solver.hpp"
#include "goka/verify.hpp"

namespace goka::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

namespace detail {

/// Collects failed checks; keeps the first few messages for the report.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }

  bool ok() const noexcept { return failures_ == 0; }
  int checks() const noexcept { return checks_; }

  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failed";
    for (const auto& m : messages_) s << "; " << m;
    return s.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
};

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

inline CriterionResult timed(int id, std::string title, double budget,
                             const std::function<std::string(Checker&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.budget_seconds = budget;
  Checker c;
  const auto start = Clock::now();
  std::string note;
  try {
    note = body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = seconds_since(start);
  c.check(r.seconds < budget, "runtime over budget");
  r.passed = c.ok();
  while (!note.empty() && note.back() == ' ') note.pop_back();
  r.detail = note.empty() ? c.summary() : note + "; " + c.summary();
  return r;
}

inline std::string name(const char* what, long long a) { return std::string(what) + "=" + std::to_string(a); }

inline int sources(const Digraph& d) {
  int q = 0;
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.in_degree(v) == 0) ++q;
  return q;
}

}  // namespace detail

constexpr std::uint64_t kCorpusSeed = 0x60ca'2024'0001ULL;
constexpr std::uint64_t kFunctionalSeed = 0x60ca'2024'0002ULL;
constexpr std::uint64_t kTreeSeed = 0x60ca'2024'0003ULL;
constexpr std::uint64_t kGraphSeed = 0x60ca'2024'0004ULL;

/// 500 seeded digraphs with 1..8 vertices and arc probability cycling
/// through 0.2, 0.5, 0.8.
inline std::vector<Digraph> oracle_corpus(int count = 500) {
  constexpr double densities[] = {0.2, 0.5, 0.8};
  std::vector<Digraph> corpus;
  Rng pick(kCorpusSeed);
  for (int i = 0; i < count; ++i) {
    const int n = pick.between(1, 8);
    corpus.push_back(random_family(Family::digraph, n, kCorpusSeed + static_cast<std::uint64_t>(i), densities[i % 3]));
  }
  return corpus;
}

inline CriterionResult extremal_equality() {
  return detail::timed(1, "extremal family attains the degree-ratio lower bound (k=1)", 15.0, [](detail::Checker& c) {
    std::string note;
    for (int t : {5, 6, 7}) {
      const auto inst = extremal_cycle_example(t);
      c.check(static_cast<bool>(certify_extremal(inst.digraph, inst.witness)), detail::name("witness rejected t", t));
      const auto start = detail::Clock::now();
      const auto r = min_goka_exact(inst.digraph, 1);
      c.check(detail::seconds_since(start) < 5.0, detail::name("solve over 5s t", t));
      const auto lower = degree_ratio_lower_bound(inst.digraph, 1);
      c.check(r.value == 3 && r.optimal, detail::name("gamma_1 != 3 at t", t));
      c.check(lower.has_value() && *lower == Rational(3), detail::name("lower bound != 3 at t", t));
      c.check(verify_goka(inst.digraph, r.witness, 1).is_goka, detail::name("witness not certified t", t));
      note += "t=" + std::to_string(t) + ":" + std::to_string(r.value) + "=" +
              (lower ? to_string(*lower) : std::string("n/a")) + " ";
    }
    return note;
  });
}

inline CriterionResult bipartite_sharpness_check() {
  return detail::timed(2, "bipartite upper bound is attained", 1.0, [](detail::Checker& c) {
    const Digraph d = bipartite_sharpness(2, 3);
    const auto r = min_goka_exact(d, 2);
    const auto ub = bipartite_upper_bound(d, 2);
    c.check(ub.has_value(), "sharpness instance not bipartite");
    if (ub) {
      c.check(ub->below_k == 4, "n_<k != 4");
      c.check(ub->exact == Rational(5), "(n + n_<k)/2 != 5");
    }
    c.check(r.value == 5, "gamma_2 != 5 for k=2, p=3");
    const auto small = min_goka_exact(bipartite_sharpness(1, 1), 1);
    c.check(small.value == 2, "gamma_1 != 2 for k=1, p=1");
    return "k=2,p=3: " + std::to_string(r.value) + "; k=1,p=1: " + std::to_string(small.value);
  });
}

inline CriterionResult reduction_equivalence() {
  return detail::timed(3, "EC3S reduction equivalence", 30.0, [](detail::Checker& c) {
    std::string note;
    const Ec3sInstance smallest = smallest_ec3s();
    for (int k : {0, 1}) {
      const auto red = reduce_ec3s(smallest, k);
      const auto r = min_goka_exact(red.digraph, k);
      const long long expected = k == 0 ? 16 : 22;
      c.check(red.target == expected, detail::name("target mismatch k", k));
      c.check(r.value == expected, detail::name("alliance number != target for smallest instance k", k));
      c.check(classify(red.digraph).bipartite, detail::name("reduced digraph not bipartite k", k));
      try {
        const auto cover = alliance_to_cover(red, r.witness);
        c.check(is_exact_cover(smallest, cover), "extracted cover not exact");
      } catch (const Error& e) {
        c.check(false, std::string("extraction failed: ") + e.what());
      }
      note += "smallest k=" + std::to_string(k) + ":" + std::to_string(r.value) + " ";
    }
    if (auto yes = find_regular_ec3s(6, true)) {
      for (int k : {0, 1}) {
        const auto red = reduce_ec3s(*yes, k);
        const auto r = min_goka_exact(red.digraph, k);
        c.check(r.value == red.target, detail::name("n=6 coverable instance missed target k", k));
      }
    }
    if (auto no = find_regular_ec3s(6, false)) {
      for (int k : {0, 1}) {
        const auto red = reduce_ec3s(*no, k);
        const auto r = min_goka_exact(red.digraph, k);
        c.check(r.value > red.target, detail::name("n=6 instance without cover reached target k", k));
        note += "no-cover k=" + std::to_string(k) + ":" + std::to_string(r.value) + ">" +
                std::to_string(red.target) + " ";
      }
    } else {
      note += "no-cover leg vacuous ";
    }
    return note;
  });
}

inline CriterionResult functional_construction() {
  return detail::timed(4, "functional digraph construction within floor((n+q+1)/2)", 60.0, [](detail::Checker& c) {
    Rng pick(kFunctionalSeed);
    for (int i = 0; i < 200; ++i) {
      const int n = pick.between(2, 12);
      const Digraph d = random_family(Family::functional_connected, n, kFunctionalSeed + static_cast<std::uint64_t>(i));
      const auto dec = functional_alliance(d);
      const int q = detail::sources(d);
      c.check(verify_goka(d, dec.alliance, 1).is_goka, detail::name("alliance not certified, instance", i));
      c.check(static_cast<int>(dec.alliance.size()) <= (n + q + 1) / 2, detail::name("size over bound, instance", i));
    }
    const std::vector<int> zeros(4, 0);
    const Digraph star = functional_sharpness(4, zeros);
    const auto r = min_goka_exact(star, 1);
    const int bound = (star.order() + detail::sources(star) + 1) / 2;
    c.check(r.value == 6 && bound == 6, "sharpness instance optimum != 6");
    return "sharpness optimum " + std::to_string(r.value) + ", bound " + std::to_string(bound);
  });
}

inline CriterionResult gap_families() {
  return detail::timed(5, "alliance/domination gap equals b", 30.0, [](detail::Checker& c) {
    std::string note;
    for (int b : {1, 2, 3}) {
      for (bool tree : {false, true}) {
        const Digraph d = tree ? gap_tree(b) : gap_cycle(b);
        const int gap = min_goka_exact(d, 1).value - min_dominating_exact(d).value;
        c.check(gap == b, std::string(tree ? "tree" : "cycle") + " gap != b at b=" + std::to_string(b));
        note += (tree ? "T" : "C") + std::to_string(b) + ":" + std::to_string(gap) + " ";
      }
    }
    return note;
  });
}

inline CriterionResult domination_equality() {
  return detail::timed(6, "alliance number equals domination number on rooted trees and contrafunctional digraphs",
                       60.0, [](detail::Checker& c) {
    Rng pick(kTreeSeed);
    for (int i = 0; i < 100; ++i) {
      const Digraph t = random_family(Family::rooted_tree, pick.between(1, 10), kTreeSeed + static_cast<std::uint64_t>(i));
      c.check(min_goka_exact(t, 1).value == min_dominating_exact(t).value, detail::name("rooted tree", i));
      const Digraph f = random_family(Family::contrafunctional, pick.between(2, 10), kTreeSeed + 1000 + static_cast<std::uint64_t>(i));
      c.check(min_goka_exact(f, 1).value == min_dominating_exact(f).value, detail::name("contrafunctional", i));
    }
    return std::string();
  });
}

inline CriterionResult oracle_agreement() {
  return detail::timed(7, "branch and bound agrees with the exhaustive oracle", 120.0, [](detail::Checker& c) {
    const auto corpus = oracle_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (int k : {-1, 0, 1, 2}) {
        const auto fast = min_goka_exact(corpus[i], k);
        const auto slow = min_goka_naive(corpus[i], k);
        c.check(fast.value == slow.value && fast.witness == slow.witness,
                "instance " + std::to_string(i) + " k=" + std::to_string(k));
      }
    }
    return std::to_string(corpus.size()) + " digraphs x 4 values of k";
  });
}

inline CriterionResult property_suite() {
  return detail::timed(8, "property suite", 120.0, [](detail::Checker& c) {
    const auto corpus = oracle_corpus();
    Rng rng(kCorpusSeed ^ 0xfeed);
    int sandwich = 0;

    auto alliance_checks = [&](const Digraph& d, const VertexSet& s, int k, const std::string& where) {
      const VertexSet rest = s.complement();
      long long rhs = static_cast<long long>(k) * static_cast<long long>(rest.size());
      for (Vertex v : rest.members()) rhs += d.in_degree(v);
      c.check(2LL * static_cast<long long>(cut_size(d, s, rest)) >= rhs, "cut inequality " + where);
      for (Vertex v = 0; v < d.order(); ++v)
        if (d.in_degree(v) == 0 && !s.contains(v)) {
          c.check(false, "source outside alliance " + where);
          break;
        }
    };

    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Digraph& d = corpus[i];
      const std::string where = "instance " + std::to_string(i);
      const int max_in = degrees(d).max_in;
      const int gamma = min_dominating_exact(d).value;
      c.check(gamma <= min_goka_exact(d, 1).value, "gamma > gamma_1 " + where);

      std::optional<int> previous;
      for (int k = 2 - max_in; k <= max_in; ++k) {
        const auto r = min_goka_exact(d, k);
        alliance_checks(d, r.witness, k, where);
        if (previous) c.check(*previous <= r.value, "k-monotonicity " + where);
        previous = r.value;
        if (auto lower = degree_ratio_lower_bound(d, k)) {
          c.check(round_up(*lower) <= r.value, "lower bound above optimum " + where);
          ++sandwich;
        }
        if (auto upper = bipartite_upper_bound(d, k)) {
          c.check(r.value <= upper->bound, "bipartite upper bound below optimum " + where);
          c.check(verify_goka(d, upper->witness, k).is_goka, "upper witness not certified " + where);
        }
      }
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<bool> mask(static_cast<std::size_t>(d.order()));
        for (std::size_t v = 0; v < mask.size(); ++v) mask[v] = rng.chance(0.6);
        const VertexSet s = VertexSet::from_mask(mask);
        for (int k = -1; k <= 2; ++k)
          if (verify_goka(d, s, k).is_goka) alliance_checks(d, s, k, where);
      }
    }

    for (int i = 0; i < 100; ++i) {
      const Digraph d = random_family(Family::bipartite, rng.between(1, 9), kCorpusSeed + 5000 + static_cast<std::uint64_t>(i), 0.5);
      const int max_in = degrees(d).max_in;
      for (int k = 2 - max_in; k <= max_in; ++k) {
        const int value = min_goka_exact(d, k).value;
        if (auto lower = degree_ratio_lower_bound(d, k)) c.check(round_up(*lower) <= value, "bipartite lower bound");
        const auto upper = bipartite_upper_bound(d, k);
        c.check(upper.has_value() && value <= upper->bound, "bipartite upper bound " + std::to_string(i));
        if (upper) c.check(verify_goka(d, upper->witness, k).is_goka, "bipartite upper witness");
        ++sandwich;
      }
    }

    int graphs = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = rng.between(1, 9);
      const auto edges = random_simple_graph(n, kGraphSeed + static_cast<std::uint64_t>(i), i % 2 ? 0.6 : 0.35);
      const auto improved = graph_degree_lower_bound(n, edges, 1);
      const auto older = graph_parity_lower_bound(n, edges);
      if (improved && older) {
        c.check(*improved >= *older, "graph bound comparison " + std::to_string(i));
        ++graphs;
      }
    }

    for (int i = 0; i < 100; ++i) {
      const int n = rng.between(1, 8);
      const auto edges = random_simple_graph(n, kGraphSeed + 1000 + static_cast<std::uint64_t>(i), 0.5);
      std::vector<bool> mask(static_cast<std::size_t>(n));
      for (std::size_t v = 0; v < mask.size(); ++v) mask[v] = rng.chance(0.5);
      const VertexSet s = VertexSet::from_mask(mask);
      const int k = rng.between(-2, 3);
      c.check(verify_goka_undirected(n, edges, s, k) == verify_goka(bidirect(n, edges), s, k).is_goka,
              "biorientation equivalence " + std::to_string(i));
    }

    for (int i = 0; i < 100; ++i) {
      const int n = rng.between(1, 10);
      const Digraph t = random_family(Family::directed_tree, n, kTreeSeed + 2000 + static_cast<std::uint64_t>(i));
      c.check(min_dominating_exact(t).value <= (n + detail::sources(t)) / 2, "directed tree bound " + std::to_string(i));
      const int m = rng.between(1, 10);
      const Digraph r = random_family(Family::rooted_tree, m, kTreeSeed + 3000 + static_cast<std::uint64_t>(i));
      c.check(min_dominating_exact(r).value <= (m + 1) / 2, "rooted tree bound " + std::to_string(i));
    }
    return std::to_string(sandwich) + " sandwich pairs, " + std::to_string(graphs) + " graph-bound pairs";
  });
}

inline std::vector<CriterionResult> run_all() {
  return {extremal_equality(), bipartite_sharpness_check(), reduction_equivalence(), functional_construction(),
          gap_families(),      domination_equality(),       oracle_agreement(),      property_suite()};
}

inline void print(std::ostream& out, const CriterionResult& r) {
  std::ostringstream time;
  time << std::fixed << std::setprecision(3) << r.seconds;
  out << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << " | " << r.title << " | " << time.str()
      << "s of " << r.budget_seconds << "s | " << r.detail << '\n';
}

}  // namespace goka::acceptance
