#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "c4free/bench.hpp"
#include "c4free/frugal.hpp"
#include "c4free/generators.hpp"
#include "c4free/graph_io.hpp"
#include "c4free/oracle.hpp"
#include "c4free/pipeline.hpp"
#include "c4free/sidon.hpp"
#include "c4free/verify.hpp"

namespace c4free::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// The command ran but its subject failed verification.
struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

/// Writes through `write` to `path`, or to `fallback` when path is empty.
template <class F>
void emit(const std::string& path, std::ostream& fallback, F write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  auto f = open_out(path);
  write(f);
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

FrugalMode parse_mode(const std::string& s) {
  if (s == "strict") return FrugalMode::strict;
  if (s == "empirical") return FrugalMode::empirical;
  throw UsageError("--mode must be strict or empirical, got '" + s + "'");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

struct FrugalFlags {
  double alpha = 18.0;
  std::uint64_t seed = 1;
  std::string mode = "strict";
  double retention = 0.3;
  int resamples = 20;

  void add_to(CLI::App* app) {
    app->add_option("--alpha", alpha, "Palette factor alpha");
    app->add_option("--seed", seed, "RNG seed");
    app->add_option("--mode", mode, "strict or empirical");
    app->add_option("--retention", retention, "Empirical retention target");
    app->add_option("--resamples", resamples, "Frugal resample cap");
  }

  FrugalParams params() const {
    FrugalParams p;
    p.alpha = alpha;
    p.seed = seed;
    p.mode = parse_mode(mode);
    p.empirical_retention = retention;
    p.max_resamples = resamples;
    return p;
  }
};

Graph read_graph(const std::string& path) {
  auto in = open_in(path);
  return load_edge_list(in);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"C4-free edge decomposition toolkit", "c4free"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // decompose
  std::string input, output, strategy = "auto", stats_path, map_path;
  FrugalFlags ff;
  bool timing = false;
  std::optional<std::size_t> threshold, max_iterations;
  std::size_t budget_slack = 0;
  int progress_resamples = 5;
  auto* dec = app.add_subcommand("decompose", "Partition a graph's edges into C4-free classes");
  dec->add_option("--input", input, "Edge list")->required();
  dec->add_option("--out", output, "Colouring output (stdout if omitted)");
  dec->add_option("--strategy", strategy, "auto, pipeline, forest or greedy");
  dec->add_option("--stats", stats_path, "Write run statistics as JSON");
  dec->add_option("--remap", map_path, "Compact vertex ids and write 'new original' pairs here");
  dec->add_option("--threshold", threshold, "Peeling threshold");
  dec->add_option("--max-iterations", max_iterations, "Iteration cap");
  dec->add_option("--budget-slack", budget_slack, "Extra classes allowed per complete colouring");
  dec->add_option("--progress-resamples", progress_resamples, "Retries per iteration");
  dec->add_flag("--timing", timing, "Record wall time in the stats");
  ff.add_to(dec);

  // verify
  std::string colouring_path, graph_path;
  bool forest_check = false;
  auto* ver = app.add_subcommand("verify", "Check that a colouring is C4-free");
  ver->add_option("--colouring", colouring_path, "Colouring file")->required();
  ver->add_option("--input", graph_path, "Graph the colouring must cover exactly");
  ver->add_flag("--forest", forest_check, "Also require every class to be a forest");

  // gen
  std::string gen_type, gen_out;
  std::size_t gen_n = 0, gen_d = 0, gen_a = 0, gen_b = 0;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--type", gen_type,
                  "regular, er, complete, bipartite, cycle, path, star, tree or petersen")
      ->required();
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--d", gen_d, "Degree (regular)");
  gen->add_option("--p", gen_p, "Edge probability (er)");
  gen->add_option("--a", gen_a, "First side (bipartite)");
  gen->add_option("--b", gen_b, "Second side (bipartite)");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

  // complete
  std::size_t complete_t = 0;
  std::string complete_out;
  std::size_t complete_slack = 0;
  auto* comp = app.add_subcommand("complete", "C4-free colouring of K_t");
  comp->add_option("--t", complete_t, "Order of the complete graph")->required();
  comp->add_option("--out", complete_out, "Colouring output (stdout if omitted)");
  comp->add_option("--budget-slack", complete_slack, "Extra classes tolerated");

  // frugal
  std::string frugal_input, chi_out, h_out;
  FrugalFlags fg;
  auto* fru = app.add_subcommand("frugal", "Proper 1-frugal colouring of a spanning subgraph");
  fru->add_option("--input", frugal_input, "Edge list")->required();
  fru->add_option("--chi", chi_out, "Vertex colouring output");
  fru->add_option("--h-out", h_out, "Edge list of H");
  fg.add_to(fru);

  // oracle
  std::string oracle_input;
  std::optional<std::size_t> oracle_ex;
  std::size_t max_colours = 8, edges_at_3 = 15;
  auto* ora = app.add_subcommand("oracle", "Exact answers for tiny instances");
  ora->add_option("--input", oracle_input, "Edge list; prints the exact C4-free colouring number");
  ora->add_option("--ex", oracle_ex, "Order n; prints ex(n, C4)");
  ora->add_option("--max-colours", max_colours, "Search limit");
  ora->add_option("--edges-at-3", edges_at_3, "Edge cap at three colours");

  // bound
  std::uint64_t bound_delta = 0;
  std::optional<std::uint64_t> bound_ex;
  auto* bnd = app.add_subcommand("bound", "Lower bound on the classes needed for K_{delta+1}");
  bnd->add_option("--delta", bound_delta, "Maximum degree")->required();
  bnd->add_option("--ex", bound_ex, "Known value of ex(delta+1, C4)");

  // bench
  std::size_t bench_n = 1000;
  std::string d_list, strategies = "auto", csv_path;
  std::size_t seed_count = 1;
  unsigned jobs = 1;
  FrugalFlags fb;
  bool bench_timing = false;
  int bench_progress = 5;
  auto* ben = app.add_subcommand("bench", "Decompose random regular graphs and report CSV");
  ben->add_option("--n", bench_n, "Vertex count");
  ben->add_option("--d-list", d_list, "Comma-separated degrees")->required();
  ben->add_option("--seeds", seed_count, "Number of seeds, starting at --seed");
  ben->add_option("--strategies", strategies, "Comma-separated strategies");
  ben->add_option("--csv", csv_path, "CSV output (stdout if omitted)");
  ben->add_option("--jobs", jobs, "Worker threads");
  ben->add_option("--progress-resamples", bench_progress, "Retries per pipeline iteration");
  ben->add_flag("--timing", bench_timing, "Record wall time (breaks byte-reproducibility)");
  fb.add_to(ben);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (dec->parsed()) {
      PipelineConfig cfg;
      cfg.frugal = ff.params();
      cfg.strategy = parse_strategy(strategy);
      cfg.degree_threshold = threshold;
      cfg.max_iterations = max_iterations;
      cfg.budget_slack = budget_slack;
      cfg.progress_resamples = progress_resamples;
      Graph g;
      std::vector<std::uint64_t> original;
      {
        auto in = open_in(input);
        if (map_path.empty()) {
          g = load_edge_list(in);
        } else {
          auto rg = load_edge_list_remapped(in);
          g = std::move(rg.graph);
          original = std::move(rg.original_id);
        }
      }
      auto result = decompose(g, cfg);
      if (!timing) result.stats.millis = 0;
      emit(output, out, [&](std::ostream& s) { save_colouring(result.colouring, s); });
      if (!map_path.empty()) {
        emit(map_path, out, [&](std::ostream& s) {
          for (std::size_t v = 0; v < original.size(); ++v) s << v << ' ' << original[v] << '\n';
        });
      }
      if (!stats_path.empty()) {
        emit(stats_path, out, [&](std::ostream& s) { s << stats_to_json(result.stats); });
      }
      if (!output.empty()) {
        out << "classes=" << result.colouring.classes << " delta=" << result.stats.delta
            << " sqrt_ratio=" << fixed(result.stats.sqrt_ratio, 4)
            << " strategy=" << to_string(result.stats.chosen)
            << (result.stats.degraded ? " degraded" : "") << '\n';
      }
      return kExitOk;
    }

    if (ver->parsed()) {
      EdgeColouring col;
      {
        auto in = open_in(colouring_path);
        col = load_colouring(in);
      }
      VerificationReport report;
      if (!graph_path.empty()) {
        const Graph g = read_graph(graph_path);
        if (std::vector<Edge>(g.edges().begin(), g.edges().end()) != col.edges) {
          throw Invalid("colouring does not cover exactly the edges of '" + graph_path + "'");
        }
        report = verify_c4_free_colouring(g, col);
      } else {
        report = verify_c4_free_colouring(col);
      }
      if (report.ok && forest_check) report = verify_forest_classes(col);
      if (!report.ok) {
        out << report.summary() << '\n';
        return kExitInvalid;
      }
      out << "OK classes=" << col.classes << '\n';
      return kExitOk;
    }

    if (gen->parsed()) {
      Graph g;
      if (gen_type == "regular") {
        g = random_regular(gen_n, gen_d, gen_seed);
      } else if (gen_type == "er") {
        if (gen_p < 0.0 || gen_p > 1.0) throw std::invalid_argument("--p must lie in [0, 1]");
        g = erdos_renyi(gen_n, gen_p, gen_seed);
      } else if (gen_type == "complete") {
        g = complete_graph(gen_n);
      } else if (gen_type == "bipartite") {
        g = complete_bipartite(gen_a, gen_b);
      } else if (gen_type == "cycle") {
        g = cycle_graph(gen_n);
      } else if (gen_type == "path") {
        g = path_graph(gen_n);
      } else if (gen_type == "star") {
        g = star_graph(gen_n);
      } else if (gen_type == "tree") {
        g = random_tree(gen_n, gen_seed);
      } else if (gen_type == "petersen") {
        g = petersen_graph();
      } else {
        throw UsageError("unknown graph type '" + gen_type + "'");
      }
      emit(gen_out, out, [&](std::ostream& s) { save_edge_list(g, s); });
      return kExitOk;
    }

    if (comp->parsed()) {
      if (complete_t < 2) throw std::invalid_argument("--t must be at least 2");
      CompleteOptions opts;
      opts.budget_slack = complete_slack;
      auto kt = complete_c4_free_colouring(complete_t, opts);
      emit(complete_out, out, [&](std::ostream& s) { save_colouring(kt.to_edge_colouring(), s); });
      if (!complete_out.empty()) {
        out << "classes=" << kt.classes() << " budget=" << two_sqrt_ceil(complete_t) + complete_slack
            << " prime=" << kt.prime() << (kt.within_budget() ? "" : " over-budget") << '\n';
      }
      return kExitOk;
    }

    if (fru->parsed()) {
      const Graph g = read_graph(frugal_input);
      auto r = frugal_colour(g, fg.params());
      if (!chi_out.empty()) emit(chi_out, out, [&](std::ostream& s) { save_vertex_colouring(r.chi, s); });
      if (!h_out.empty()) emit(h_out, out, [&](std::ostream& s) { save_edge_list(r.h, s); });
      out << "palette=" << r.chi.palette << " h_edges=" << r.h.num_edges() << " of "
          << g.num_edges() << " min_retention=" << fixed(r.min_retention, 4)
          << " mean_retention=" << fixed(r.mean_retention, 4) << " resamples=" << r.resamples_used
          << (r.degraded ? " degraded" : "") << '\n';
      return kExitOk;
    }

    if (ora->parsed()) {
      if (oracle_ex.has_value() == !oracle_input.empty()) {
        throw UsageError("oracle needs exactly one of --input and --ex");
      }
      if (oracle_ex) {
        out << exact_ex_c4(*oracle_ex) << '\n';
      } else {
        const Graph g = read_graph(oracle_input);
        out << exact_phi_c4(g, max_colours, OracleLimits{edges_at_3}) << '\n';
      }
      return kExitOk;
    }

    if (bnd->parsed()) {
      if (bound_delta == 0) throw std::invalid_argument("--delta must be at least 1");
      out << phi_lower_bound(bound_delta, bound_ex) << '\n';
      return kExitOk;
    }

    if (ben->parsed()) {
      BenchConfig bc;
      bc.n = bench_n;
      for (const auto& d : split_commas(d_list)) {
        try {
          bc.degrees.push_back(std::stoull(d));
        } catch (const std::exception&) {
          throw UsageError("--d-list entry '" + d + "' is not an integer");
        }
      }
      for (std::size_t i = 0; i < seed_count; ++i) bc.seeds.push_back(fb.seed + i);
      for (const auto& s : split_commas(strategies)) bc.strategies.push_back(parse_strategy(s));
      bc.pipeline.frugal = fb.params();
      bc.pipeline.progress_resamples = bench_progress;
      bc.jobs = jobs;
      bc.timing = bench_timing;
      std::vector<BenchRow> rows;
      try {
        rows = run_bench(bc);
      } catch (const std::logic_error&) {
        throw;
      } catch (const GraphError&) {
        throw;
      } catch (const std::runtime_error& e) {
        throw Invalid(e.what());
      }
      emit(csv_path, out, [&](std::ostream& s) { write_bench_csv(rows, s); });
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: io: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Invalid& e) {
    err << "error: invalid: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleCapExceeded& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FieldError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInvalid;
  }
  err << "error: usage: no subcommand\n";
  return kExitUsage;
}

}  // namespace c4free::cli
