#pragma once

// The `goka` command-line front end. Every subcommand reads its input,
// calls one library function and prints a `key: value` report.
//
// Exit status: 0 success or true, 1 verified false or bound inapplicable,
// 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "goka/acceptance.hpp"
#include "goka/bounds.hpp"
#include "goka/digraph.hpp"
#include "goka/digraph_io.hpp"
#include "goka/ec3s.hpp"
#include "goka/error.hpp"
#include "goka/families.hpp"
#include "goka/random.hpp"
#include "goka/report.hpp"
#include "goka/solver.hpp"
#include "goka/verify.hpp"

namespace goka {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;

namespace cli {

struct Options {
  int k = 1;
  std::string input = "-";
  std::string set;
  std::string method = "exact";
  std::optional<double> time_limit;
  std::uint64_t seed = 1;
  double density = 0.5;
  std::string output;
  std::vector<std::string> params;
};

/// Thrown for bad values that CLI11 cannot check on its own.
struct UsageError : Error {
  using Error::Error;
};

inline int to_int(const std::string& s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  return v;
}

inline std::vector<Vertex> parse_id_list(const std::string& text) {
  std::vector<Vertex> ids;
  if (text.empty() || text == "none") return ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) ids.push_back(to_int(item, "--set"));
  return ids;
}

template <typename Reader>
auto read_input(const std::string& path, std::istream& in, Reader reader) {
  try {
    if (path == "-") return reader(in);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input '" + path + "'");
    return reader(file);
  } catch (const ParseError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

inline Digraph read_graph(const Options& o, std::istream& in) {
  return read_input(o.input, in, [](std::istream& s) { return read_digraph(s); });
}

inline void add_input(Report& r, const Digraph& d) {
  r.add("vertices", d.order());
  r.add("arcs", d.arc_count());
}

inline Method parse_method(const std::string& m) {
  if (m == "naive") return Method::naive;
  if (m == "greedy") return Method::greedy;
  return Method::exact;
}

inline int cmd_solve(const Options& o, Objective obj, std::istream& in, std::ostream& out) {
  const Digraph d = read_graph(o, in);
  TimeLimit limit;
  if (o.time_limit) limit = std::chrono::duration<double>(*o.time_limit);
  const int k = obj == Objective::alliance ? o.k : 1;
  const SolveResult r = solve(d, obj, k, parse_method(o.method), limit);
  Report rep;
  rep.add("command", obj == Objective::alliance ? "solve" : "gamma");
  add_input(rep, d);
  if (obj == Objective::alliance) rep.add("k", o.k);
  rep.add("method", to_string(r.method));
  rep.add("value", r.value);
  rep.add("witness", r.witness);
  rep.add("optimal", r.optimal);
  rep.add("nodes_explored", r.nodes_explored);
  rep.add("forced", r.forced_prefix);
  rep.write(out);
  return exit_ok;
}

inline int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Digraph d = read_graph(o, in);
  VertexSet s;
  try {
    s = VertexSet(d.order(), parse_id_list(o.set));
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
  const AllianceCertificate cert = verify_goka(d, s, o.k);
  Report rep;
  rep.add("command", "verify");
  add_input(rep, d);
  rep.add("k", o.k);
  rep.add("set", cert.set);
  rep.add("is_dominating", cert.is_dominating);
  rep.add("is_goka", cert.is_goka);
  rep.add("k_in_studied_range", cert.k_in_studied_range);
  rep.add("violations", cert.violations.size());
  for (const Violation& v : cert.violations)
    rep.add("violation", std::to_string(v.vertex) + " in_from_set=" + std::to_string(v.in_from_set) +
                             " in_from_complement=" + std::to_string(v.in_from_complement) + " reason=" +
                             std::string(to_string(v.reason)));
  rep.write(out);
  return cert.is_goka ? exit_ok : exit_false;
}

inline int cmd_bounds(const Options& o, std::istream& in, std::ostream& out) {
  const Digraph d = read_graph(o, in);
  const BoundsReport b = bounds_report(d, o.k);
  Report rep;
  rep.add("command", "bounds");
  add_input(rep, d);
  rep.add("k", o.k);
  if (b.lower) {
    rep.add("lower_bound", to_string(*b.lower));
    rep.add("lower_bound_ceiling", *b.lower_ceiling);
  } else {
    rep.add("lower_bound", "inapplicable (" + b.lower_reason + ")");
  }
  rep.add("below_k", b.below_k);
  rep.add("forced", b.forced);
  if (b.upper) {
    rep.add("upper_bound", to_string(b.upper->exact));
    rep.add("upper_bound_floor", b.upper->bound);
    rep.add("upper_witness", b.upper->witness);
  } else {
    rep.add("upper_bound", "inapplicable (" + b.upper_reason + ")");
  }
  if (b.graph_degree_bound) rep.add("graph_degree_bound", *b.graph_degree_bound);
  if (b.graph_parity_bound) rep.add("graph_parity_bound", *b.graph_parity_bound);
  if (!b.graph_reason.empty()) rep.add("graph_bounds", "partial or absent (" + b.graph_reason + ")");
  rep.write(out);
  return b.lower ? exit_ok : exit_false;
}

inline void add_classes(Report& rep, const ClassReport& c) {
  rep.add("connected", c.connected);
  rep.add("bipartite", c.bipartite);
  rep.add("functional", c.functional);
  rep.add("contrafunctional", c.contrafunctional);
  rep.add("rooted_tree", c.rooted_tree);
  rep.add("root", c.root ? std::to_string(*c.root) : std::string("none"));
  rep.add("directed_tree", c.directed_tree);
  rep.add("sources", c.source_count);
  rep.add("sinks", c.sink_count);
}

inline int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const Digraph d = read_graph(o, in);
  Report rep;
  rep.add("command", "classify");
  add_input(rep, d);
  add_classes(rep, classify(d));
  rep.write(out);
  return exit_ok;
}

/// Builds a generator family from its name and positional parameters.
/// Returns the digraph plus the class it is advertised to belong to.
inline std::pair<Digraph, std::string> generate(const Options& o) {
  if (o.params.empty()) throw UsageError("generate needs a family name");
  const std::string& family = o.params[0];
  const std::vector<std::string> args(o.params.begin() + 1, o.params.end());
  auto need = [&](std::size_t count, const char* usage) {
    if (args.size() != count) throw UsageError(std::string("usage: generate ") + usage);
  };
  auto arg = [&](std::size_t i) { return to_int(args[i], family.c_str()); };
  try {
    if (family == "extremal-cycle") {
      need(1, "extremal-cycle T");
      return {extremal_cycle_example(arg(0)).digraph, "connected"};
    }
    if (family == "bipartite-sharp") {
      need(2, "bipartite-sharp K P");
      return {bipartite_sharpness(arg(0), arg(1)), "bipartite"};
    }
    if (family == "functional-sharp") {
      if (args.empty()) throw UsageError("usage: generate functional-sharp T H1 .. HT");
      const int t = arg(0);
      std::vector<int> halves;
      for (std::size_t i = 1; i < args.size(); ++i) halves.push_back(arg(i));
      if (static_cast<int>(halves.size()) != t) throw UsageError("functional-sharp needs exactly T path lengths");
      return {functional_sharpness(t, halves), "functional"};
    }
    if (family == "gap-cycle") {
      need(1, "gap-cycle B");
      return {gap_cycle(arg(0)), "functional"};
    }
    if (family == "gap-tree") {
      need(1, "gap-tree B");
      return {gap_tree(arg(0)), "directed_tree"};
    }
    if (family == "random") {
      need(2, "random KIND N");
      const auto kind = family_from_string(args[0]);
      if (!kind) throw UsageError("unknown random kind '" + args[0] + "'");
      std::string advertised(to_string(*kind));
      if (*kind == Family::functional_connected) advertised = "functional";
      if (*kind == Family::digraph) advertised = "any";
      return {random_family(*kind, arg(1), o.seed, o.density), advertised};
    }
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + family + "'");
}

inline void write_to(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open output '" + path + "'");
  file << text;
}

inline int cmd_generate(const Options& o, std::ostream& out) {
  const auto [d, advertised] = generate(o);
  Report rep;
  rep.add("command", "generate");
  std::string params;
  for (std::size_t i = 1; i < o.params.size(); ++i) params += (i > 1 ? " " : "") + o.params[i];
  rep.add("family", o.params[0]);
  rep.add("params", params.empty() ? std::string("none") : params);
  if (o.params[0] == "random") {
    rep.add("seed", o.seed);
    rep.add("density", std::to_string(o.density));
  }
  rep.add("class", advertised);
  add_input(rep, d);
  write_to(o.output, out, rep.str("# ") + to_text(d));
  return exit_ok;
}

inline int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const Ec3sInstance inst = read_input(o.input, in, [](std::istream& s) { return read_ec3s(s); });
  ReductionOutput red;
  try {
    red = reduce_ec3s(inst, o.k);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const int n = inst.n_elements;
  Report rep;
  rep.add("command", "reduce-ec3s");
  rep.add("elements", n);
  rep.add("k", red.k);
  add_input(rep, red.digraph);
  rep.add("target", red.target);
  rep.add("element_vertices", "0.." + std::to_string(n - 1));
  rep.add("set_vertices", std::to_string(n) + ".." + std::to_string(2 * n - 1));
  rep.add("element_pendants", std::to_string(2 * n) + ".." + std::to_string(2 * n + n * (o.k + 2) - 1));
  rep.add("set_pendants",
          std::to_string(2 * n + n * (o.k + 2)) + ".." + std::to_string(red.digraph.order() - 1));
  if (o.output.empty() || o.output == "-") {
    out << rep.str("# ") << to_text(red.digraph);
  } else {
    write_to(o.output, out, to_text(red.digraph));
    write_to(o.output + ".report", out, rep.str());
    rep.write(out);
  }
  return exit_ok;
}

inline int cmd_selftest(std::ostream& out) {
  bool all = true;
  for (const auto& r : acceptance::run_all()) {
    acceptance::print(out, r);
    all = all && r.passed;
  }
  out << "selftest: " << (all ? "PASS" : "FAIL") << '\n';
  return all ? exit_ok : exit_false;
}

}  // namespace cli

/// `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  cli::Options o;
  CLI::App app{"Global offensive k-alliances in digraphs", "goka"};
  app.require_subcommand(1);

  auto add_k = [&](CLI::App* sub) { sub->add_option("-k,--k", o.k, "alliance parameter k")->capture_default_str(); };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "digraph file, or - for standard input")->capture_default_str();
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "search method")
        ->check(CLI::IsMember({"exact", "naive", "greedy"}))
        ->capture_default_str();
    sub->add_option("--time-limit", o.time_limit, "seconds before returning the incumbent")
        ->check(CLI::NonNegativeNumber);
  };

  auto* solve_cmd = app.add_subcommand("solve", "minimum global offensive k-alliance");
  add_k(solve_cmd);
  add_input(solve_cmd);
  add_solver(solve_cmd);

  auto* gamma_cmd = app.add_subcommand("gamma", "minimum dominating set");
  add_input(gamma_cmd);
  add_solver(gamma_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "certify a vertex set");
  add_k(verify_cmd);
  add_input(verify_cmd);
  verify_cmd->add_option("--set", o.set, "comma-separated vertex ids")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "lower and upper bounds");
  add_k(bounds_cmd);
  add_input(bounds_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "structural classes");
  add_input(classify_cmd);

  auto* generate_cmd = app.add_subcommand("generate", "write a generated digraph");
  generate_cmd->add_option("family", o.params, "family name and parameters")->required();
  generate_cmd->add_option("--seed", o.seed, "seed for random families")->capture_default_str();
  generate_cmd->add_option("--density", o.density, "arc probability for random families")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate_cmd->add_option("--output", o.output, "output file");

  auto* reduce_cmd = app.add_subcommand("reduce-ec3s", "reduce an exact-cover instance");
  add_k(reduce_cmd);
  add_input(reduce_cmd);
  reduce_cmd->add_option("--output", o.output, "digraph file; the report goes to <output>.report");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "goka: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (solve_cmd->parsed()) return cli::cmd_solve(o, Objective::alliance, in, out);
    if (gamma_cmd->parsed()) return cli::cmd_solve(o, Objective::domination, in, out);
    if (verify_cmd->parsed()) return cli::cmd_verify(o, in, out);
    if (bounds_cmd->parsed()) return cli::cmd_bounds(o, in, out);
    if (classify_cmd->parsed()) return cli::cmd_classify(o, in, out);
    if (generate_cmd->parsed()) return cli::cmd_generate(o, out);
    if (reduce_cmd->parsed()) return cli::cmd_reduce(o, in, out);
    if (selftest_cmd->parsed()) return cli::cmd_selftest(out);
  } catch (const Error& e) {
    err << "goka: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace goka
