#include "chromabound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chromabound/bounds.hpp"
#include "chromabound/dimacs.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/exact_color.hpp"
#include "chromabound/generators.hpp"
#include "chromabound/majorization.hpp"
#include "chromabound/random.hpp"
#include "chromabound/report.hpp"
#include "chromabound/reversal.hpp"
#include "chromabound/spectrum.hpp"
#include "json_util.hpp"

namespace chromabound {
namespace {

using ojson = nlohmann::ordered_json;

/// Thrown for bad command-line values that CLI11 cannot catch itself.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : "-"; }

struct CommonOptions {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string output;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  cmd->add_option("--tol", o.tol, "Numerical tolerance")->capture_default_str();
  cmd->add_option("--output,-o", o.output, "Write to this file instead of stdout");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

/// Routes output to --output when given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

struct BoundOptions {
  std::string method = "all";
  int restarts = 8;
  int iterations = 200;
  std::size_t exact_limit = 30;
  std::uint64_t budget = kDefaultNodeBudget;
  bool allow_complex = false;
  std::string barnes = "coordinate-descent";
  unsigned threads = 1;
};

void add_bound_flags(CLI::App* cmd, BoundOptions& b) {
  cmd->add_option("--method", b.method, "Bound to compute")
      ->check(CLI::IsMember({"hoffman", "wilf", "tau-ones", "tau-opt", "barnes", "all"}))
      ->capture_default_str();
  cmd->add_option("--restarts", b.restarts, "Optimizer restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--iters", b.iterations, "Pattern-search iterations per restart")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--exact-limit", b.exact_limit, "Largest n for the exact oracle")
      ->capture_default_str();
  cmd->add_option("--budget", b.budget, "Node budget of the exact oracle")->capture_default_str();
  cmd->add_flag("--complex", b.allow_complex, "Optimize over complex (phase) weights too");
  cmd->add_option("--barnes", b.barnes, "Diagonal search for the Barnes bound")
      ->check(CLI::IsMember({"hoffman-diag", "coordinate-descent"}))
      ->capture_default_str();
  cmd->add_option("--threads", b.threads, "Worker threads (0 = hardware)")->capture_default_str();
}

BoundConfig make_bound_config(const BoundOptions& b, const CommonOptions& c, unsigned threads) {
  BoundConfig cfg;
  cfg.method = *parse_method(b.method);
  cfg.optimizer.restarts = b.restarts;
  cfg.optimizer.iterations = b.iterations;
  cfg.optimizer.seed = c.seed;
  cfg.optimizer.allow_complex = b.allow_complex;
  cfg.optimizer.tol = c.tol;
  cfg.optimizer.threads = threads;
  cfg.barnes.strategy = b.barnes == "hoffman-diag" ? BarnesStrategy::hoffman_diag
                                                   : BarnesStrategy::coordinate_descent;
  cfg.exact_limit = b.exact_limit;
  cfg.exact_budget = b.budget;
  cfg.tol = c.tol;
  return cfg;
}

Graph load_graph(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Graph g = read_dimacs_file(path, &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return g;
}

void print_report_text(const BoundReport& r, std::ostream& out) {
  out << "graph        " << r.graph_id << '\n'
      << "vertices     " << r.n << '\n'
      << "edges        " << r.m << '\n'
      << "wilf         " << fmt(r.wilf) << '\n'
      << "hoffman      " << fmt(r.hoffman) << '\n'
      << "tau-ones     " << fmt(r.tau_ones) << '\n'
      << "barnes       " << fmt(r.barnes) << '\n'
      << "tau-opt      " << fmt(r.tau_optimized) << '\n'
      << "exact chi    " << (r.exact_chi ? std::to_string(*r.exact_chi) : "-") << '\n'
      << "lower bound  " << r.lower_bound << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
}

// ---------------------------------------------------------------- bound

int cmd_bound(const std::string& input, const BoundOptions& b, const CommonOptions& c,
              std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(input, err);
  const BoundReport report = chromatic_lower_bound(g, input, make_bound_config(b, c, b.threads));
  Sink sink(c.output, out);
  if (c.format == "json") {
    sink.stream() << to_json(report);
  } else {
    print_report_text(report, sink.stream());
  }
  return kExitOk;
}

// ---------------------------------------------------------------- reverse

std::vector<int> read_color_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open coloring file '" + path + "'");
  std::vector<int> colors;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(0, "coloring file: not an integer: '" + tok + "'");
    colors.push_back(value);
  }
  return colors;
}

int cmd_reverse(const std::string& input, const std::vector<std::string>& colors_arg,
                const std::vector<std::string>& weight_arg, const std::string& emit_map,
                const CommonOptions& c, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(input, err);

  std::string source = colors_arg.empty() ? "exact" : colors_arg[0];
  Coloring coloring;
  if (source == "dsatur") {
    if (colors_arg.size() != 1) throw UsageError("--colors dsatur takes no argument");
    coloring = greedy_dsatur(g);
  } else if (source == "exact") {
    if (colors_arg.size() > 1) throw UsageError("--colors exact takes no argument");
    const ColoringResult res = exact_chi(g);
    if (res.timed_out) err << "warning: exact oracle timed out; using best coloring found\n";
    coloring = res.witness;
  } else if (source == "file") {
    if (colors_arg.size() != 2) throw UsageError("--colors file needs a path");
    const std::vector<int> raw = read_color_file(colors_arg[1]);
    if (raw.size() != g.vertex_count()) {
      throw ParseError(0, "coloring file has " + std::to_string(raw.size()) + " entries, graph has " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
    coloring = make_coloring(g, raw);
  } else {
    throw UsageError("--colors must be dsatur, exact or file <path>");
  }

  std::string weight_kind = weight_arg.empty() ? "ones" : weight_arg[0];
  WeightMatrix w;
  if (weight_kind == "ones") {
    if (weight_arg.size() > 1) throw UsageError("--weight ones takes no argument");
    w = ones_weight(g.vertex_count());
  } else if (weight_kind == "random") {
    std::uint64_t wseed = c.seed;
    if (weight_arg.size() == 2) {
      try {
        wseed = std::stoull(weight_arg[1]);
      } catch (const std::exception&) {
        throw UsageError("--weight random: seed must be an integer");
      }
    } else if (weight_arg.size() > 2) {
      throw UsageError("--weight random takes at most one seed");
    }
    Rng rng(wseed);
    w = {random_hermitian(g.vertex_count(), rng, true), WeightOrigin::user, wseed};
  } else {
    throw UsageError("--weight must be ones or random [seed]");
  }

  const SignReversalMap map = reversal_from_coloring(g, coloring);
  const HermitianMatrix target = weighted_adjacency(g, w);
  const ReversalCheck check = verify_reversal(map, target, c.tol);
  std::optional<double> lower;
  if (target.frobenius_norm() > 0.0) lower = cost_lower_bound(target);

  if (!emit_map.empty()) {
    std::ofstream f(emit_map);
    if (!f) throw UsageError("cannot open map file '" + emit_map + "'");
    f << serialize_map(map);
  }

  Sink sink(c.output, out);
  if (c.format == "json") {
    ojson j;
    j["graphId"] = input;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["colorSource"] = source;
    j["weight"] = weight_kind;
    j["numColors"] = coloring.num_colors;
    j["cost"] = detail::round12(reversal_cost(map));
    j["numColorsMinusOne"] = coloring.num_colors - 1;
    j["residual"] = detail::round12(check.residual);
    j["ok"] = check.ok;
    j["costLowerBound"] = lower ? ojson(detail::round12(*lower)) : ojson(nullptr);
    sink.stream() << j.dump(2) << '\n';
  } else {
    sink.stream() << "graph            " << input << '\n'
                  << "colors           " << coloring.num_colors << " (" << source << ")\n"
                  << "cost             " << fmt(reversal_cost(map)) << '\n'
                  << "colors - 1       " << coloring.num_colors - 1 << '\n'
                  << "residual         " << fmt(check.residual) << '\n'
                  << "verified         " << (check.ok ? "yes" : "no") << '\n'
                  << "cost lower bound " << fmt(lower) << '\n';
  }
  return check.ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- chi

int cmd_chi(const std::string& input, std::uint64_t budget, const CommonOptions& c,
            std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(input, err);
  const ColoringResult res = exact_chi(g, budget);
  Sink sink(c.output, out);
  if (c.format == "json") {
    ojson j;
    j["graphId"] = input;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["chi"] = res.chi;
    j["lowerBound"] = res.lower_bound;
    j["timedOut"] = res.timed_out;
    j["nodesExplored"] = res.nodes_explored;
    j["coloring"] = res.witness.colors;
    sink.stream() << j.dump(2) << '\n';
  } else if (res.timed_out) {
    sink.stream() << "timed out after " << res.nodes_explored << " nodes: chi in ["
                  << res.lower_bound << ", " << res.chi << "]\n";
  } else {
    sink.stream() << "chi    " << res.chi << '\n' << "nodes  " << res.nodes_explored << '\n';
  }
  return res.timed_out ? kExitOracleTimeout : kExitOk;
}

// ---------------------------------------------------------------- compare

struct CompareItem {
  std::string id;
  std::optional<Graph> graph;
  std::string error;
};

int cmd_compare(const std::vector<std::string>& inputs, bool gen_corpus, const BoundOptions& b,
                const CommonOptions& c, std::ostream& out, std::ostream& err) {
  std::vector<CompareItem> items;
  for (const auto& path : inputs) {
    CompareItem item{path, std::nullopt, {}};
    try {
      item.graph = load_graph(path, err);
    } catch (const Error& e) {
      item.error = e.what();
    }
    items.push_back(std::move(item));
  }
  if (gen_corpus) {
    for (auto& named : default_corpus()) items.push_back({named.id, std::move(named.graph), {}});
  }
  if (items.empty()) throw UsageError("compare needs at least one graph (files or --gen-corpus)");

  // Graph-level parallelism; each optimizer then runs single-threaded.
  const BoundConfig cfg = make_bound_config(b, c, 1);
  auto run = [&cfg](const CompareItem& item) {
    if (!item.graph) {
      BoundReport r;
      r.graph_id = item.id;
      r.seed = cfg.optimizer.seed;
      r.notes.push_back("error: " + item.error);
      return r;
    }
    return chromatic_lower_bound(*item.graph, item.id, cfg);
  };

  std::vector<BoundReport> reports(items.size());
  const unsigned threads =
      std::max(1u, b.threads ? b.threads : std::thread::hardware_concurrency());
  for (std::size_t first = 0; first < items.size(); first += threads) {
    const std::size_t last = std::min(items.size(), first + threads);
    std::vector<std::future<BoundReport>> batch;
    for (std::size_t i = first; i < last; ++i) {
      batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, run,
                                 std::cref(items[i])));
    }
    for (std::size_t i = first; i < last; ++i) reports[i] = batch[i - first].get();
  }

  std::size_t improved = 0;
  for (const auto& r : reports) {
    if (!r.tau_optimized) continue;
    double baseline = -1.0;
    if (r.hoffman) baseline = std::max(baseline, *r.hoffman);
    if (r.barnes) baseline = std::max(baseline, *r.barnes);
    if (*r.tau_optimized > baseline + 1e-6) ++improved;
  }
  const std::string summary = "tau-opt exceeds max(hoffman, barnes) + 1e-6 on " +
                              std::to_string(improved) + " of " + std::to_string(reports.size()) +
                              " graphs";

  Sink sink(c.output, out);
  if (c.format == "json") {
    sink.stream() << to_json(reports);
    err << summary << '\n';
    return kExitOk;
  }
  std::ostream& o = sink.stream();
  o << std::left << std::setw(22) << "graph" << std::right << std::setw(5) << "n" << std::setw(6)
    << "m" << std::setw(14) << "wilf" << std::setw(14) << "hoffman" << std::setw(14) << "tau-ones"
    << std::setw(14) << "barnes" << std::setw(14) << "tau-opt" << std::setw(5) << "chi"
    << std::setw(7) << "lower" << "  notes\n";
  auto cell = [](const std::optional<double>& v) {
    char buf[40];
    if (!v) return std::string("-");
    std::snprintf(buf, sizeof buf, "%.9g", *v);
    return std::string(buf);
  };
  for (const auto& r : reports) {
    o << std::left << std::setw(22) << r.graph_id << std::right << std::setw(5) << r.n
      << std::setw(6) << r.m << std::setw(14) << cell(r.wilf) << std::setw(14) << cell(r.hoffman)
      << std::setw(14) << cell(r.tau_ones) << std::setw(14) << cell(r.barnes) << std::setw(14)
      << cell(r.tau_optimized) << std::setw(5)
      << (r.exact_chi ? std::to_string(*r.exact_chi) : "-") << std::setw(7) << r.lower_bound;
    if (!r.notes.empty()) {
      o << "  ";
      for (std::size_t i = 0; i < r.notes.size(); ++i) o << (i ? "; " : "") << r.notes[i];
    }
    o << '\n';
  }
  o << summary << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- gen

std::size_t parse_size(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size() && v >= 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw ParameterError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
}

GeneratorSpec parse_generator(const std::string& kind, const std::vector<std::string>& params,
                              std::uint64_t seed) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParameterError(kind + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  GeneratorSpec spec;
  if (kind == "complete" || kind == "cycle" || kind == "star") {
    need(1);
    spec.kind = kind == "complete" ? GraphKind::complete
                : kind == "cycle"  ? GraphKind::cycle
                                   : GraphKind::star;
    spec.n = parse_size(params[0], "n");
  } else if (kind == "petersen") {
    need(0);
    spec.kind = GraphKind::petersen;
  } else if (kind == "mycielski") {
    need(1);
    spec.kind = GraphKind::mycielski;
    spec.k = parse_size(params[0], "k");
  } else if (kind == "kneser") {
    need(2);
    spec.kind = GraphKind::kneser;
    spec.n = parse_size(params[0], "n");
    spec.k = parse_size(params[1], "k");
  } else if (kind == "random" || kind == "erdos-renyi") {
    need(2);
    spec.kind = GraphKind::erdos_renyi;
    spec.n = parse_size(params[0], "n");
    try {
      spec.p = std::stod(params[1]);
    } catch (const std::exception&) {
      throw ParameterError("p must be a number, got '" + params[1] + "'");
    }
    spec.seed = seed;
  } else {
    throw ParameterError("unknown graph kind '" + kind +
                         "' (complete, cycle, star, petersen, mycielski, kneser, random)");
  }
  return spec;
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed,
            const std::string& path, std::ostream& out) {
  const GeneratorSpec spec = parse_generator(kind, params, seed);
  const Graph g = generate(spec);
  Sink sink(path, out);
  write_dimacs(g, sink.stream(), "generated: " + describe(spec));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral lower bounds on the chromatic number", "chromabound"};
  app.require_subcommand(1);

  CommonOptions common;
  BoundOptions bound_opts;

  std::string input;
  auto* bound = app.add_subcommand("bound", "Bounds for one DIMACS graph");
  bound->add_option("input", input, "DIMACS .col file")->required();
  add_bound_flags(bound, bound_opts);
  add_common(bound, common);

  std::vector<std::string> colors_arg;
  std::vector<std::string> weight_arg;
  std::string emit_map;
  auto* reverse = app.add_subcommand("reverse", "Build and verify a coloring sign-reversal map");
  reverse->add_option("input", input, "DIMACS .col file")->required();
  reverse->add_option("--colors", colors_arg, "dsatur | exact | file <path>")->expected(1, 2);
  reverse->add_option("--weight", weight_arg, "ones | random [seed]")->expected(1, 2);
  reverse->add_option("--emit-map", emit_map, "Write the map as JSON to this path");
  add_common(reverse, common);

  std::uint64_t budget = kDefaultNodeBudget;
  auto* chi = app.add_subcommand("chi", "Exact chromatic number");
  chi->add_option("input", input, "DIMACS .col file")->required();
  chi->add_option("--budget", budget, "Search node budget")->capture_default_str();
  add_common(chi, common);

  std::vector<std::string> inputs;
  bool gen_corpus = false;
  auto* compare = app.add_subcommand("compare", "Bound table over several graphs");
  compare->add_option("inputs", inputs, "DIMACS .col files");
  compare->add_flag("--gen-corpus", gen_corpus, "Include the built-in test corpus");
  add_bound_flags(compare, bound_opts);
  add_common(compare, common);

  std::string kind;
  std::vector<std::string> params;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Emit a generated graph in DIMACS format");
  gen->add_option("kind", kind, "complete|cycle|star|petersen|mycielski|kneser|random")
      ->required();
  gen->add_option("params", params, "Generator parameters");
  gen->add_option("--out", gen_out, "Output path (default stdout)");
  gen->add_option("--seed", common.seed, "Seed for random graphs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*bound) return cmd_bound(input, bound_opts, common, out, err);
    if (*reverse) return cmd_reverse(input, colors_arg, weight_arg, emit_map, common, out, err);
    if (*chi) return cmd_chi(input, budget, common, out, err);
    if (*compare) return cmd_compare(inputs, gen_corpus, bound_opts, common, out, err);
    if (*gen) return cmd_gen(kind, params, common.seed, gen_out, out);
  } catch (const ColoringError& e) {
    err << "error: " << e.what() << " (edge " << e.u() + 1 << " " << e.v() + 1 << ")\n";
    return kExitImproperColoring;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace chromabound
