#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symqaoa/bench.hpp"
#include "symqaoa/energy.hpp"
#include "symqaoa/errors.hpp"
#include "symqaoa/json_io.hpp"
#include "symqaoa/optimize.hpp"

namespace {

using namespace symqaoa;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitSolverTimeout = 4;
constexpr int kExitInconsistent = 5;

struct CliOptions {
  std::string graph_file;
  int p = 1;
  std::string betas;
  std::string gammas;
  bool full = false;
  bool reduced = false;
  bool weighted = false;
  std::string objective = "maxcut";
  int width_guard = kDefaultWidthGuard;
  int threads = 0;
  double solver_timeout = 600.0;
  bool use_partial_generators = false;
  std::uint64_t seed = 0;
  int grid = 8;
  int top_k = 3;
  int nm_iters = 200;
  int cutoff = 2;
  bool allow_degenerate = false;
  std::string name;
  std::string csv_file;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::vector<double> parse_angles(const std::string& text, int expected,
                                 const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    double v = 0.0;
    const char* begin = tok.data();
    auto [ptr, ec] = std::from_chars(begin, begin + tok.size(), v);
    if (ec != std::errc{} || ptr != begin + tok.size()) {
      throw ParseError("invalid " + what + " entry '" + tok + "'");
    }
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) != expected) {
    throw ParseError(what + " must list exactly " + std::to_string(expected) +
                     " angles, got " + std::to_string(out.size()));
  }
  return out;
}

Hamiltonian build_objective(const Graph& g, const std::string& objective) {
  if (objective == "maxcut") return build_maxcut(g);
  if (objective == "ising") return build_ising(g);
  throw ParseError("unknown objective '" + objective + "'");
}

/// Symmetries with graceful degradation: on timeout fall back to the
/// trivial group (or the partial generators when explicitly allowed).
GeneratorSet symmetries_or_fallback(const Graph& g, const CliOptions& opt) {
  try {
    return graph_symmetries(g, {opt.solver_timeout});
  } catch (const SolverTimeout& e) {
    if (opt.use_partial_generators) return e.partial_generators();
    return GeneratorSet{g.n_vertices, {}};
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_orbits(const CliOptions& opt) {
  const Graph g = load_graph(opt.graph_file);
  const Hamiltonian h = build_objective(g, opt.objective);
  GeneratorSet gens;
  if (opt.weighted) {
    gens = graph_symmetries(g, {opt.solver_timeout});
  } else {
    gens = automorphism_generators(uniform_coloring(g),
                                   {.time_budget_s = opt.solver_timeout});
  }
  emit(to_json(term_orbits(gens, h)));
  return kExitOk;
}

int cmd_energy(const CliOptions& opt) {
  const Graph g = load_graph(opt.graph_file);
  const Hamiltonian h = build_objective(g, opt.objective);
  QaoaParams prm;
  prm.p = opt.p;
  prm.betas = parse_angles(opt.betas, opt.p, "--betas");
  prm.gammas = parse_angles(opt.gammas, opt.p, "--gammas");
  const EvalConfig ecfg{opt.width_guard, opt.threads};
  if (opt.full) {
    emit(to_json(full_energy(h, prm, ecfg)));
  } else {
    const OrbitPartition orbits =
        term_orbits(symmetries_or_fallback(g, opt), h);
    emit(to_json(reduced_energy(h, orbits, prm, ecfg)));
  }
  return kExitOk;
}

int cmd_optimize(const CliOptions& opt) {
  const Graph g = load_graph(opt.graph_file);
  const Hamiltonian h = build_objective(g, opt.objective);
  const EvalConfig ecfg{opt.width_guard, opt.threads};
  OptimizerConfig ocfg;
  ocfg.seed = opt.seed;
  ocfg.grid_points_per_angle = opt.grid;
  ocfg.refine_top_k = opt.top_k;
  ocfg.nm_max_iters = opt.nm_iters;
  if (opt.full) {
    emit(to_json(optimize_params(h, nullptr, opt.p, ocfg, ecfg)));
  } else {
    const OrbitPartition orbits =
        term_orbits(symmetries_or_fallback(g, opt), h);
    emit(to_json(optimize_params(h, &orbits, opt.p, ocfg, ecfg)));
  }
  return kExitOk;
}

int cmd_rqaoa(const CliOptions& opt) {
  const Graph g = load_graph(opt.graph_file);
  const Hamiltonian h = build_objective(g, opt.objective);
  RqaoaConfig cfg;
  cfg.p = opt.p;
  cfg.n_cutoff = opt.cutoff;
  cfg.opt.seed = opt.seed;
  cfg.opt.grid_points_per_angle = opt.grid;
  cfg.opt.refine_top_k = opt.top_k;
  cfg.opt.nm_max_iters = opt.nm_iters;
  cfg.eval = EvalConfig{opt.width_guard, opt.threads};
  cfg.sym = SymmetryConfig{opt.solver_timeout};
  cfg.use_partial_generators_on_timeout = opt.use_partial_generators;
  cfg.allow_degenerate_elimination = opt.allow_degenerate;
  emit(to_json(rqaoa_run(h, cfg)));
  return kExitOk;
}

int cmd_bench(const CliOptions& opt) {
  const Graph g = load_graph(opt.graph_file);
  QaoaParams prm;
  prm.p = opt.p;
  prm.betas = parse_angles(opt.betas, opt.p, "--betas");
  prm.gammas = parse_angles(opt.gammas, opt.p, "--gammas");
  BenchConfig cfg;
  cfg.eval = EvalConfig{opt.width_guard, opt.threads};
  cfg.sym = SymmetryConfig{opt.solver_timeout};
  cfg.weighted = opt.weighted;
  cfg.ising = opt.objective == "ising";
  std::string name = opt.name;
  if (name.empty()) {
    name = opt.graph_file;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
      name = name.substr(slash + 1);
    }
    if (auto dot = name.find_last_of('.'); dot != std::string::npos) {
      name = name.substr(0, dot);
    }
  }
  const BenchReport report = run_bench(g, name, opt.p, prm, cfg);
  if (!opt.csv_file.empty()) {
    std::ofstream out(opt.csv_file, std::ios::binary);
    out << bench_csv_header() << bench_csv_row(report);
  }
  emit(to_json(report));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA energy evaluation accelerated by graph-automorphism term orbits"};
  app.require_subcommand(1);
  CliOptions opt;

  auto add_common = [&](CLI::App* sub, bool needs_angles, bool has_modes) {
    sub->add_option("graph", opt.graph_file, "edge-list file")->required();
    sub->add_option("--threads", opt.threads,
                    "worker threads (0 = SYMQAOA_THREADS or hardware)");
    sub->add_option("--width-guard", opt.width_guard,
                    "maximum cone width in qubits");
    sub->add_option("--solver-timeout", opt.solver_timeout,
                    "automorphism search budget, seconds");
    sub->add_flag("--use-partial-generators", opt.use_partial_generators,
                  "keep generators found before a solver timeout");
    sub->add_option("--objective", opt.objective, "maxcut or ising")
        ->check(CLI::IsMember({"maxcut", "ising"}));
    if (needs_angles) {
      sub->add_option("--p", opt.p, "circuit depth")->required();
      sub->add_option("--betas", opt.betas, "comma-separated, length p")
          ->required();
      sub->add_option("--gammas", opt.gammas, "comma-separated, length p")
          ->required();
    }
    if (has_modes) {
      auto* full = sub->add_flag("--full", opt.full, "evaluate every term");
      sub->add_flag("--reduced", opt.reduced,
                    "one evaluation per term orbit (default)")
          ->excludes(full);
    }
  };

  CLI::App* orbits = app.add_subcommand("orbits", "term orbit partition");
  add_common(orbits, false, false);
  orbits->add_flag("--weighted", opt.weighted,
                   "respect edge weights via the vertex-colored gadget");

  CLI::App* energy = app.add_subcommand("energy", "evaluate the energy once");
  add_common(energy, true, true);

  CLI::App* optimize = app.add_subcommand("optimize", "maximize the energy");
  add_common(optimize, false, true);
  optimize->add_option("--p", opt.p, "circuit depth")->required();
  optimize->add_option("--seed", opt.seed, "RNG seed");
  optimize->add_option("--grid", opt.grid, "grid points per angle");
  optimize->add_option("--top-k", opt.top_k, "seeds refined by Nelder-Mead");
  optimize->add_option("--nm-iters", opt.nm_iters, "Nelder-Mead iterations");

  CLI::App* rqaoa = app.add_subcommand("rqaoa", "recursive elimination");
  add_common(rqaoa, false, false);
  rqaoa->add_option("--p", opt.p, "circuit depth")->required();
  rqaoa->add_option("--cutoff", opt.cutoff, "brute-force remnant size");
  rqaoa->add_option("--seed", opt.seed, "RNG seed");
  rqaoa->add_option("--grid", opt.grid, "grid points per angle");
  rqaoa->add_option("--top-k", opt.top_k, "seeds refined by Nelder-Mead");
  rqaoa->add_option("--nm-iters", opt.nm_iters, "Nelder-Mead iterations");
  rqaoa->add_flag("--allow-degenerate", opt.allow_degenerate,
                  "fall back to lexicographic elimination at zero correlation");

  CLI::App* bench = app.add_subcommand("bench", "time full vs reduced modes");
  add_common(bench, true, false);
  bench->add_flag("--weighted", opt.weighted,
                  "respect edge weights via the vertex-colored gadget");
  bench->add_option("--name", opt.name, "report row name");
  bench->add_option("--csv", opt.csv_file, "also write a CSV row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  // The weighted orbit pipeline defaults to the coupling objective.
  if (app.got_subcommand(orbits) && opt.weighted &&
      orbits->count("--objective") == 0) {
    opt.objective = "ising";
  }

  try {
    if (app.got_subcommand(orbits)) return cmd_orbits(opt);
    if (app.got_subcommand(energy)) return cmd_energy(opt);
    if (app.got_subcommand(optimize)) return cmd_optimize(opt);
    if (app.got_subcommand(rqaoa)) return cmd_rqaoa(opt);
    if (app.got_subcommand(bench)) return cmd_bench(opt);
    return kExitInput;
  } catch (const SolverTimeout& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolverTimeout;
  } catch (const ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const DegenerateCorrelationsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}
