#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hcolor/catalog.hpp"
#include "hcolor/formats.hpp"
#include "hcolor/observation.hpp"
#include "hcolor/solver.hpp"

namespace hcolor::cli {
namespace {

constexpr double kDefaultTimeoutSeconds = 30 * 60;

struct LoadedGraph {
  GraphRef graph;
  std::optional<std::string> catalog_name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::UnknownGraphDesignator, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedGraph load_graph(const std::string& arg) {
  if (arg.starts_with("@")) {
    auto named = catalog::named(arg);
    return {share(std::move(named.graph)), std::string(catalog::to_string(named.name))};
  }
  return {share(formats::parse_graph_text(read_file(arg))), std::nullopt};
}

// Batch rows: @NAME or one graph6/sparse6 line.
GraphRef load_inline(const std::string& line) {
  if (line.starts_with("@")) return share(catalog::named(line).graph);
  return share(formats::parse_graph_text(line));
}

struct Limits {
  std::optional<std::uint64_t> node_limit;
  double timeout_seconds = kDefaultTimeoutSeconds;
  std::string order = "most_constrained";
  bool symmetry = false;

  SolveOptions options() const {
    SolveOptions o;
    o.node_limit = node_limit;
    if (timeout_seconds > 0) {
      o.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(timeout_seconds * 1000));
    }
    o.order = order == "bfs" ? OrderHeuristic::Bfs : OrderHeuristic::MostConstrained;
    o.break_parallel_symmetry = symmetry;
    return o;
  }
};

void add_limit_flags(CLI::App* cmd, Limits& limits) {
  cmd->add_option("--node-limit", limits.node_limit, "Abort after this many search nodes")->check(CLI::PositiveNumber);
  cmd->add_option("--timeout", limits.timeout_seconds, "Wall-clock limit in seconds (0 disables)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--order", limits.order, "Branching order")
      ->check(CLI::IsMember({"bfs", "most_constrained"}));
  cmd->add_flag("--symmetry", limits.symmetry, "Break symmetry among parallel pattern edges at the root");
}

int exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::Colorable: return kEstablished;
    case SolveStatus::NotColorable: return kNegative;
    case SolveStatus::ResourceLimit: return kResourceLimit;
  }
  return kUsage;
}

std::string join(const std::vector<std::size_t>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------- show

int cmd_show(const std::string& graph_arg, const std::string& format, std::ostream& out) {
  const auto g = load_graph(graph_arg);
  if (format == "sparse6") out << formats::write_sparse6(*g.graph) << '\n';
  else if (format == "graph6") out << formats::write_graph6(*g.graph) << '\n';
  else out << formats::write_edge_list(*g.graph);
  return kEstablished;
}

// ---------------------------------------------------------------- invariants

int cmd_invariants(const std::string& graph_arg, std::ostream& out) {
  const auto loaded = load_graph(graph_arg);
  const MultiGraph& g = *loaded.graph;
  const auto degrees = degree_sequence(g);
  const bool regular = !degrees.empty() && degrees.front() == degrees.back();

  out << "graph: " << graph_arg << '\n';
  out << "order: " << g.vertex_count() << '\n';
  out << "size: " << g.edge_count() << '\n';
  out << "degrees: " << join(degrees) << '\n';
  out << "regular: " << (regular ? std::to_string(degrees.front()) : "no") << '\n';
  out << "cubic: " << (is_k_regular(g, 3) && g.vertex_count() > 0 ? "yes" : "no") << '\n';
  out << "connected: " << (is_connected(g) ? "yes" : "no") << '\n';
  out << "bridges: " << bridges(g).size() << '\n';
  out << "two_circuit_edges: " << two_circuit_edges(g).size() << '\n';
  out << "chromatic_index: " << (g.edge_count() ? std::to_string(chromatic_index(g)) : "undefined") << '\n';
  out << "perfect_matching: " << (find_perfect_matching(g) ? "yes" : "no") << '\n';
  const auto circuits = circuit_summary(g);
  std::vector<std::size_t> even;
  std::copy_if(circuits.lengths.begin(), circuits.lengths.end(), std::back_inserter(even),
               [](std::size_t l) { return l % 2 == 0; });
  out << "circuits: " << circuits.count << '\n';
  out << "circuit_lengths: " << join(circuits.lengths) << '\n';
  out << "even_circuit_lengths: " << join(even) << '\n';
  return kEstablished;
}

// ---------------------------------------------------------------- solve

void print_stats(std::ostream& out, const SearchStats& s) {
  out << "nodes: " << s.nodes << '\n' << "max_depth: " << s.max_depth << '\n';
}

int cmd_solve(const std::string& graph_arg, const std::string& pattern_arg, std::optional<std::size_t> all,
              const Limits& limits, const std::string& cert_path, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(graph_arg);
  const auto h = load_graph(pattern_arg);
  const auto opts = limits.options();

  std::vector<EdgeMapping> certs;
  SolveStatus status;
  SearchStats stats;
  if (all) {
    auto run = enumerate(g.graph, h.graph, opts, *all);
    certs = std::move(run.certificates);
    stats = run.stats;
    status = !certs.empty() ? SolveStatus::Colorable
             : run.exhaustive ? SolveStatus::NotColorable
                              : SolveStatus::ResourceLimit;
    out << to_string(status) << '\n';
    out << "certificates: " << certs.size() << (run.exhaustive ? " (exhaustive)" : "") << '\n';
  } else {
    auto outcome = solve(g.graph, h.graph, opts);
    status = outcome.status;
    stats = outcome.stats;
    if (outcome.certificate) certs.push_back(std::move(*outcome.certificate));
    out << to_string(status) << '\n';
  }
  print_stats(out, stats);
  err << "wall_ms: " << std::fixed << std::setprecision(3) << stats.wall.count() << '\n';

  if (status == SolveStatus::Colorable && !cert_path.empty()) {
    std::ofstream file(cert_path);
    if (!file) {
      err << "cannot write certificate to '" << cert_path << "'\n";
      return kUsage;
    }
    file << formats::write_certificate(formats::make_certificate(certs.front(), g.catalog_name, h.catalog_name));
    out << "certificate: " << cert_path << '\n';
  }
  return exit_code(status);
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& graph_arg, const std::string& pattern_arg, const std::string& cert_path,
               std::ostream& out) {
  const auto doc = formats::parse_certificate(read_file(cert_path));
  EdgeMapping f;
  try {
    f = formats::load_certificate_mapping(doc);
  } catch (const Error& e) {
    if (e.code() != Errc::MappingNotTotal) throw;
    out << "INVALID\n" << e.what() << '\n';
    return kNegative;
  }
  auto same = [](const MultiGraph& x, const MultiGraph& y) {
    return canonical_edge_order(x).first == canonical_edge_order(y).first;
  };
  if (!graph_arg.empty() && !same(*load_graph(graph_arg).graph, *f.source)) {
    throw Error(Errc::UnknownGraphDesignator, "certificate was written for a different graph than --graph");
  }
  if (!pattern_arg.empty() && !same(*load_graph(pattern_arg).graph, *f.target)) {
    throw Error(Errc::UnknownGraphDesignator, "certificate was written for a different pattern than --pattern");
  }
  const auto report = verify(f);
  if (!report) {
    out << "INVALID\n" << report.detail << '\n';
    return kNegative;
  }
  out << "VALID\n";
  return kEstablished;
}

// ---------------------------------------------------------------- batch

struct Row {
  std::string encoding;
  std::string verdict;
  std::string nodes = "-";
  std::string millis = "-";
};

std::size_t worker_count(std::optional<std::size_t> flag) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("HCOLOR_WORKERS")) {
    try {
      auto n = std::stoul(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_batch(const std::string& pattern_arg, const std::string& graphs_path, const std::string& report_path,
              std::optional<std::size_t> workers_flag, const Limits& limits, std::ostream& out) {
  const auto h = load_graph(pattern_arg);
  std::ifstream in(graphs_path);
  if (!in) throw Error(Errc::UnknownGraphDesignator, "cannot open '" + graphs_path + "'");
  const auto lines = formats::graph_lines(in);
  const auto opts = limits.options();

  std::vector<Row> rows(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      Row& row = rows[i];
      row.encoding = lines[i];
      try {
        const auto outcome = solve(load_inline(lines[i]), h.graph, opts);
        row.verdict = std::string(to_string(outcome.status));
        row.nodes = std::to_string(outcome.stats.nodes);
        row.millis = std::to_string(static_cast<long long>(outcome.stats.wall.count()));
      } catch (const std::exception& e) {
        row.verdict = "ERROR";
        row.nodes = "-";
        row.millis = "-";
        row.encoding = lines[i];
      }
    }
  };
  const std::size_t n_workers = std::min(worker_count(workers_flag), std::max<std::size_t>(1, lines.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::ostringstream report;
  report << "graph\tverdict\tnodes\tms\n";
  for (const auto& r : rows) report << r.encoding << '\t' << r.verdict << '\t' << r.nodes << '\t' << r.millis << '\n';

  if (report_path.empty() || report_path == "-") {
    out << report.str();
  } else {
    std::ofstream file(report_path);
    if (!file) throw Error(Errc::UnknownGraphDesignator, "cannot write '" + report_path + "'");
    file << report.str();
    out << "rows: " << rows.size() << '\n';
  }
  return kEstablished;
}

// ---------------------------------------------------------------- certify-counterexample

enum class Verdict { Pass, Fail, Limit };

std::string_view name_of(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Limit: return "RESOURCE_LIMIT";
  }
  return "?";
}

int cmd_certify(const std::string& graph_arg, const Limits& limits, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(graph_arg);
  const auto s10 = share(catalog::named(catalog::Name::S10).graph);
  const auto s12 = share(catalog::named(catalog::Name::S12).graph);
  const auto opts = limits.options();
  const MultiGraph& gg = *g.graph;

  std::vector<Verdict> verdicts;
  auto row = [&](std::string_view check, Verdict v, const std::string& detail) {
    verdicts.push_back(v);
    out << check << '\t' << name_of(v) << '\t' << detail << '\n';
  };
  auto pass_if = [](bool ok) { return ok ? Verdict::Pass : Verdict::Fail; };

  out << "check\tverdict\tdetail\n";
  const bool cubic = gg.vertex_count() > 0 && is_k_regular(gg, 3);
  const bool connected = is_connected(gg);
  row("cubic_connected", pass_if(cubic && connected),
      "vertices=" + std::to_string(gg.vertex_count()) + " edges=" + std::to_string(gg.edge_count()) +
          " cubic=" + (cubic ? "yes" : "no") + " connected=" + (connected ? "yes" : "no"));

  const auto matching = find_perfect_matching(gg);
  row("perfect_matching", pass_if(matching.has_value()),
      matching ? "size=" + std::to_string(matching->size()) : std::string("none"));

  const auto bridge_count = bridges(gg).size();
  row("three_bridges", pass_if(bridge_count == 3), "bridges=" + std::to_string(bridge_count));

  auto solve_row = [&](std::string_view check, const GraphRef& graph, const GraphRef& pattern, SolveStatus want) {
    const auto outcome = solve(graph, pattern, opts);
    err << check << " wall_ms: " << std::fixed << std::setprecision(3) << outcome.stats.wall.count() << '\n';
    std::string detail = std::string(to_string(outcome.status)) + " nodes=" + std::to_string(outcome.stats.nodes);
    Verdict v;
    if (outcome.status == SolveStatus::ResourceLimit) {
      v = Verdict::Limit;
    } else if (outcome.status != want) {
      v = Verdict::Fail;
    } else if (outcome.certificate) {
      const bool ok = verify(*outcome.certificate).ok();
      v = pass_if(ok);
      detail += ok ? " certificate=verified" : " certificate=INVALID";
    } else {
      v = Verdict::Pass;
      detail += " exhaustive";
    }
    row(check, v, detail);
  };
  solve_row("not_s10_colorable", g.graph, s10, SolveStatus::NotColorable);
  solve_row("s12_is_s10_colorable", s12, s10, SolveStatus::Colorable);
  solve_row("not_s12_colorable", g.graph, s12, SolveStatus::NotColorable);

  const auto passed = std::count(verdicts.begin(), verdicts.end(), Verdict::Pass);
  const bool failed = std::count(verdicts.begin(), verdicts.end(), Verdict::Fail) > 0;
  const bool limited = std::count(verdicts.begin(), verdicts.end(), Verdict::Limit) > 0;
  const Verdict overall = failed ? Verdict::Fail : limited ? Verdict::Limit : Verdict::Pass;
  out << "summary\t" << name_of(overall) << '\t' << passed << "/" << verdicts.size() << " checks passed\n";
  return failed ? kNegative : limited ? kResourceLimit : kEstablished;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact H-coloring solver, verifier and certification toolkit", "hcolor"};
  app.require_subcommand(1);

  std::string graph_arg, pattern_arg, format = "sparse6", cert_path, graphs_path, report_path;
  std::optional<std::size_t> all, workers;
  Limits limits;

  auto* show = app.add_subcommand("show", "Print a graph encoding");
  show->add_option("--graph", graph_arg, "@NAME or file")->required();
  show->add_option("--format", format)->check(CLI::IsMember({"sparse6", "graph6", "edgelist"}));

  auto* inv = app.add_subcommand("invariants", "Print structural invariants");
  inv->add_option("--graph", graph_arg, "@NAME or file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Decide whether --pattern colors --graph");
  solve_cmd->add_option("--graph", graph_arg, "Graph G to be colored")->required();
  solve_cmd->add_option("--pattern", pattern_arg, "Graph H doing the coloring")->required();
  solve_cmd->add_option("--all", all, "Enumerate up to N certificates")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--cert", cert_path, "Write the certificate here when colorable");
  add_limit_flags(solve_cmd, limits);

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->add_option("--graph", graph_arg);
  verify_cmd->add_option("--pattern", pattern_arg);
  verify_cmd->add_option("--cert", cert_path)->required();

  auto* batch = app.add_subcommand("batch", "Solve every graph of a file against one pattern");
  batch->add_option("--pattern", pattern_arg)->required();
  batch->add_option("--graphs", graphs_path, "One graph6/sparse6/@NAME per line")->required();
  batch->add_option("--report", report_path, "Tab-separated report (default stdout)");
  batch->add_option("--workers", workers)->check(CLI::PositiveNumber);
  add_limit_flags(batch, limits);

  auto* certify = app.add_subcommand("certify-counterexample", "Re-establish the G* counterexample");
  std::string candidate = "@GSTAR";
  certify->add_option("--graph", candidate, "Candidate graph (default @GSTAR)");
  add_limit_flags(certify, limits);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kEstablished;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*show) return cmd_show(graph_arg, format, out);
    if (*inv) return cmd_invariants(graph_arg, out);
    if (*solve_cmd) return cmd_solve(graph_arg, pattern_arg, all, limits, cert_path, out, err);
    if (*verify_cmd) return cmd_verify(graph_arg, pattern_arg, cert_path, out);
    if (*batch) return cmd_batch(pattern_arg, graphs_path, report_path, workers, limits, out);
    if (*certify) return cmd_certify(candidate, limits, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::ResourceLimit ? kResourceLimit : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hcolor::cli
