#pragma once

#include <string>

#include "symqaoa/energy.hpp"
#include "symqaoa/graph.hpp"
#include "symqaoa/simulator.hpp"
#include "symqaoa/symmetry.hpp"

namespace symqaoa {

struct BenchReport {
  std::string graph_name;
  int n_vertices = 0;
  int n_edges = 0;
  int n_orb = 0;
  double t_aut = 0.0;  // seconds: generators + orbit computation
  double t_s = 0.0;    // seconds: full evaluation
  double t_acc = 0.0;  // seconds: orbit-reduced evaluation
  double speedup = 0.0;
  int p = 1;
  double reduction_ratio = 1.0;  // |E| / N_orb
  int n_threads = 1;             // same pool size for both timed modes
};

double speedup_formula(double t_s, double t_aut, double t_acc);

double amortized_speedup(double t_s, double t_aut, double t_acc, long n_evals);
double amortized_speedup(const BenchReport& report, long n_evals);

struct BenchConfig {
  EvalConfig eval;
  SymmetryConfig sym;
  bool weighted = false;  // route symmetry through the subdivision gadget
  bool ising = false;     // coupling objective instead of cut counting
};

/// Times symmetry computation, full evaluation and reduced evaluation on one
/// instance (one untimed warm-up pair first), checks that the two energies
/// agree to 1e-9 (ConsistencyError otherwise), and fills the report.
BenchReport run_bench(const Graph& g, const std::string& name, int p,
                      const QaoaParams& params, const BenchConfig& cfg = {});

std::string bench_csv_header();
std::string bench_csv_row(const BenchReport& report);

}  // namespace symqaoa
