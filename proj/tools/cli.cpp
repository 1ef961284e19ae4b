#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "detsum/bipartite.hpp"
#include "detsum/general.hpp"
#include "detsum/generators.hpp"
#include "detsum/io.hpp"
#include "detsum/oracle.hpp"
#include "detsum/parallel.hpp"
#include "detsum/report.hpp"
#include "detsum/tsp.hpp"

namespace detsum::cli {

namespace {

struct CommonOptions {
  std::uint64_t seed = 1;
  unsigned k = 0;
  int runs = 0;
  int m_max = -1;
  std::string engine = "table";
  std::string preset = "fast";
  unsigned threads = default_thread_count();
  int max_runs = 4096;
  bool no_timing = false;
  bool summary = false;

  DetectionConfig config() const {
    DetectionConfig cfg;
    cfg.seed = seed;
    cfg.k = k;
    cfg.runs = runs;
    cfg.m_max = m_max;
    cfg.engine = parse_engine(engine);
    cfg.preset = parse_preset(preset);
    cfg.threads = std::max(1u, threads);
    cfg.max_runs = max_runs;
    return cfg;
  }

  ReportOptions report() const { return {!summary, !no_timing}; }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "root seed");
  cmd->add_option("--k", o.k, "field bits, 0 = auto")->check(CLI::Range(0u, 32u));
  cmd->add_option("--runs", o.runs, "run count, 0 = auto")->check(CLI::NonNegativeNumber);
  cmd->add_option("--m-max", o.m_max, "extra label bound, -1 = auto");
  cmd->add_option("--engine", o.engine, "table | streaming")->check(CLI::IsMember({"table", "streaming"}));
  cmd->add_option("--preset", o.preset, "fast | safe")->check(CLI::IsMember({"fast", "safe"}));
  cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--max-runs", o.max_runs, "cap on automatic run counts")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-timing", o.no_timing, "omit wall-clock fields from the report");
  cmd->add_flag("--summary", o.summary, "omit per-run lines");
}

ParsedGraph load(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  return read_graph_file(path);
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad vertex '" + item + "'");
    }
    if (used != item.size()) throw InvalidInput("bad vertex '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> check_vertices(std::vector<int> vs, int n) {
  for (int v : vs)
    if (v < 0 || v >= n) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  return vs;
}

// "8..16" or "12"; an optional ":step" suffix.
std::vector<int> parse_range(const std::string& text) {
  int lo, hi, step = 1;
  std::string body = text;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    step = std::stoi(body.substr(colon + 1));
    body = body.substr(0, colon);
  }
  if (auto dots = body.find(".."); dots != std::string::npos) {
    lo = std::stoi(body.substr(0, dots));
    hi = std::stoi(body.substr(dots + 2));
  } else {
    lo = hi = std::stoi(body);
  }
  if (lo < 1 || hi < lo || step < 1) throw InvalidInput("bad range '" + text + "'");
  std::vector<int> out;
  for (int n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

struct BenchOptions {
  std::string family = "random";
  std::string n = "8..12";
  std::string detector = "general";
  int trials = 3;
  double p = 0.5;
};

void cmd_bench(const BenchOptions& b, const CommonOptions& o, std::ostream& out) {
  const DetectionConfig cfg = o.config();
  out << "n\tfamily\tengine\telapsed_ms\tverdict_rate\n";
  for (int n : parse_range(b.n)) {
    if (b.family == "hypercube" && (n < 2 || (n & (n - 1)) != 0)) continue;
    if (b.detector == "bipartite" && n % 2 != 0) continue;
    std::vector<double> times;
    int yes = 0;
    for (int t = 0; t < b.trials; ++t) {
      std::mt19937_64 rng(derive_seed(o.seed, static_cast<std::uint64_t>(n) * 1000003u + t));
      const Graph g = family_graph(b.family, n, b.p, rng);
      DetectionConfig run_cfg = cfg;
      run_cfg.seed = derive_seed(o.seed, static_cast<std::uint64_t>(t));
      const auto start = std::chrono::steady_clock::now();
      DetectionResult r;
      if (b.detector == "bipartite") {
        // Components may not balance; such graphs are not Hamiltonian anyway.
        try {
          r = detect_bipartite(make_bipartite_instance(g), run_cfg);
        } catch (const InvalidInput&) {
          r = DetectionResult{};
        }
      } else {
        r = detect_general(g, run_cfg);
      }
      times.push_back(ms_since(start));
      yes += r.hamiltonian ? 1 : 0;
    }
    std::sort(times.begin(), times.end());
    const double median = times.empty() ? 0.0 : times[times.size() / 2];
    out << n << '\t' << b.family << '\t' << (b.detector == "bipartite" ? "table" : o.engine) << '\t' << std::fixed
        << std::setprecision(3) << median << '\t' << std::setprecision(4)
        << (b.trials > 0 ? static_cast<double>(yes) / b.trials : 0.0) << '\n'
        << std::defaultfloat;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinant-sum Hamiltonicity detection and bounded-weight TSP", "detsum"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string file;
  std::string part1_text, indep_text;

  auto* detect = app.add_subcommand("detect", "Monte Carlo Hamiltonicity test for any graph");
  detect->add_option("file", file, "edge-list file, - for stdin")->required();
  add_common(detect, common);

  auto* detect_bip = app.add_subcommand("detect-bipartite", "Hamiltonicity test for balanced bipartite graphs");
  detect_bip->add_option("file", file, "edge-list file, - for stdin")->required();
  detect_bip->add_option("--part1", part1_text, "comma-separated side; default by 2-coloring");
  add_common(detect_bip, common);

  auto* detect_ind = app.add_subcommand("detect-indep", "Hamiltonicity test given an independent set");
  detect_ind->add_option("file", file, "edge-list file, - for stdin")->required();
  detect_ind->add_option("--indep", indep_text, "comma-separated independent set")->required();
  add_common(detect_ind, common);

  auto* tsp = app.add_subcommand("tsp", "minimum Hamiltonian cycle weight, positive integer weights");
  tsp->add_option("file", file, "weighted edge-list file, - for stdin")->required();
  add_common(tsp, common);

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "timing sweep over a graph family");
  bench->add_option("--family", bench_opts.family, "random | planted | bipartite | hypercube")
      ->check(CLI::IsMember({"random", "planted", "bipartite", "hypercube"}));
  bench->add_option("--n", bench_opts.n, "vertex counts, e.g. 8..16 or 12..20:2");
  bench->add_option("--detector", bench_opts.detector, "general | bipartite")
      ->check(CLI::IsMember({"general", "bipartite"}));
  bench->add_option("--trials", bench_opts.trials, "graphs per n")->check(CLI::PositiveNumber);
  bench->add_option("--p", bench_opts.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  add_common(bench, common);

  std::string oracle_kind;
  auto* oracle = app.add_subcommand("oracle", "exact reference answers");
  oracle->add_option("kind", oracle_kind, "ham | held-karp | ie-walk")
      ->required()
      ->check(CLI::IsMember({"ham", "held-karp", "ie-walk"}));
  oracle->add_option("file", file, "edge-list file, - for stdin")->required();

  std::string gen_family = "random";
  int gen_n = 8, gen_max_weight = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  auto* generate = app.add_subcommand("generate", "write a random graph as an edge list");
  generate->add_option("--family", gen_family, "random | planted | bipartite | hypercube")
      ->check(CLI::IsMember({"random", "planted", "bipartite", "hypercube"}));
  generate->add_option("--n", gen_n, "vertex count")->check(CLI::Range(1, Graph::kMaxVertices));
  generate->add_option("--p", gen_p, "edge probability")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", gen_seed, "generator seed");
  generate->add_option("--max-weight", gen_max_weight, "add weights in 1..max")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (detect->parsed()) {
      const ParsedGraph pg = load(file);
      out << format_report(detect_general(pg.graph.graph(), common.config()), common.report());
    } else if (detect_bip->parsed()) {
      const ParsedGraph pg = load(file);
      const Graph& g = pg.graph.graph();
      BipartiteInstance inst;
      if (part1_text.empty()) {
        inst = make_bipartite_instance(g);
      } else {
        std::vector<int> p1 = check_vertices(parse_vertex_list(part1_text), g.vertex_count());
        std::vector<int> p2;
        for (int v = 0; v < g.vertex_count(); ++v)
          if (std::find(p1.begin(), p1.end(), v) == p1.end()) p2.push_back(v);
        inst = make_bipartite_instance(g, std::move(p1), std::move(p2));
      }
      out << format_report(detect_bipartite(inst, common.config()), common.report());
    } else if (detect_ind->parsed()) {
      const ParsedGraph pg = load(file);
      const Graph& g = pg.graph.graph();
      const std::vector<int> indep = check_vertices(parse_vertex_list(indep_text), g.vertex_count());
      out << format_report(detect_with_independent_set(g, indep, common.config()), common.report());
    } else if (tsp->parsed()) {
      const ParsedGraph pg = load(file);
      out << format_report(solve_tsp(pg.graph, common.config()), common.report());
    } else if (bench->parsed()) {
      cmd_bench(bench_opts, common, out);
    } else if (oracle->parsed()) {
      const ParsedGraph pg = load(file);
      const Graph& g = pg.graph.graph();
      if (oracle_kind == "ham") {
        const HamiltonianCount hc = ham_bruteforce(g);
        out << "hamiltonian=" << (hc.hamiltonian ? 1 : 0) << "\noriented_cycles=" << hc.oriented << '\n';
      } else if (oracle_kind == "held-karp") {
        const auto w = held_karp(pg.graph);
        out << "tour=" << (w ? 1 : 0) << '\n';
        if (w) out << "weight=" << *w << '\n';
      } else {
        out << "ie_walk_count=" << ie_walk_count(g) << '\n';
      }
    } else if (generate->parsed()) {
      std::mt19937_64 rng(gen_seed);
      const Graph g = family_graph(gen_family, gen_n, gen_p, rng);
      if (gen_max_weight > 0)
        write_graph(out, random_weights(g, gen_max_weight, rng));
      else
        write_graph(out, g);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace detsum::cli
