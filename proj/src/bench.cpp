#include "symqaoa/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "symqaoa/errors.hpp"
#include "symqaoa/parallel.hpp"

namespace symqaoa {

double speedup_formula(double t_s, double t_aut, double t_acc) {
  return t_s / (t_aut + t_acc);
}

double amortized_speedup(double t_s, double t_aut, double t_acc,
                         long n_evals) {
  if (n_evals < 1) throw std::invalid_argument("n_evals must be >= 1");
  const double n = static_cast<double>(n_evals);
  return (n * t_s) / (t_aut + n * t_acc);
}

double amortized_speedup(const BenchReport& report, long n_evals) {
  return amortized_speedup(report.t_s, report.t_aut, report.t_acc, n_evals);
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

BenchReport run_bench(const Graph& g, const std::string& name, int p,
                      const QaoaParams& params, const BenchConfig& cfg) {
  BenchReport report;
  report.graph_name = name;
  report.n_vertices = g.n_vertices;
  report.n_edges = static_cast<int>(g.edges.size());
  report.p = p;
  report.n_threads = resolve_thread_count(cfg.eval.n_threads);

  const Hamiltonian h = cfg.ising ? build_ising(g) : build_maxcut(g);

  const auto t0 = std::chrono::steady_clock::now();
  const GeneratorSet gens =
      cfg.weighted || !uniform_weights(g)
          ? graph_symmetries(g, cfg.sym)
          : automorphism_generators(uniform_coloring(g),
                                    AutomorphismSearchOptions{cfg.sym.time_budget_s});
  const OrbitPartition orbits = term_orbits(gens, h);
  report.t_aut = seconds_since(t0);
  report.n_orb = static_cast<int>(orbits.classes.size());

  // One untimed pair absorbs allocator and cache warm-up noise.
  (void)reduced_energy(h, orbits, params, cfg.eval);
  (void)full_energy(h, params, cfg.eval);

  const auto t1 = std::chrono::steady_clock::now();
  const EnergyReport full = full_energy(h, params, cfg.eval);
  report.t_s = seconds_since(t1);

  const auto t2 = std::chrono::steady_clock::now();
  const EnergyReport reduced = reduced_energy(h, orbits, params, cfg.eval);
  report.t_acc = seconds_since(t2);

  if (std::abs(full.energy - reduced.energy) > 1e-9) {
    throw ConsistencyError(
        "full and reduced energies disagree beyond 1e-9 on '" + name + "'");
  }

  report.speedup = speedup_formula(report.t_s, report.t_aut, report.t_acc);
  report.reduction_ratio =
      report.n_orb > 0
          ? static_cast<double>(report.n_edges) / report.n_orb
          : 1.0;
  return report;
}

std::string bench_csv_header() {
  return "Name,|E|,|V|,N_orb,t_aut,t_s,t_acc,S\n";
}

std::string bench_csv_row(const BenchReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%.6g,%.6g,%.6g,%.6g\n",
                r.graph_name.c_str(), r.n_edges, r.n_vertices, r.n_orb, r.t_aut,
                r.t_s, r.t_acc, r.speedup);
  return buf;
}

}  // namespace symqaoa
