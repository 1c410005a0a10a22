#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symqaoa/energy.hpp"
#include "symqaoa/hamiltonian.hpp"
#include "symqaoa/symmetry.hpp"

namespace symqaoa {

struct OptimizerConfig {
  std::uint64_t seed = 0;
  int grid_points_per_angle = 8;  // beta in [0, pi/2), gamma in [0, pi)
  int max_grid_evals = 64;        // p >= 2 grids are subsampled to this many
  int refine_top_k = 3;           // seeds refined by Nelder-Mead
  int nm_max_iters = 200;
  double nm_ftol = 1e-10;
  double nm_step = 0.25;          // initial simplex edge, radians
};

struct OptResult {
  QaoaParams best_params;
  double best_energy = 0.0;
  long n_evaluations = 0;
  std::vector<std::pair<QaoaParams, double>> trace;
};

/// Derivative-free maximization of the energy: coarse grid seeding followed
/// by Nelder-Mead refinement from the best seeds. Uses orbit-reduced
/// evaluation when `orbits` is non-null, full evaluation otherwise; one
/// exact expectation cache spans the whole run. Deterministic given the
/// config seed.
OptResult optimize_params(const Hamiltonian& h, const OrbitPartition* orbits,
                          int p, const OptimizerConfig& ocfg = {},
                          const EvalConfig& ecfg = {});

struct EdgeCorrelation {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

/// <Z_i Z_j> for every quadratic term, one cone simulation per orbit class
/// with the value broadcast to all class members; output follows term order.
std::vector<EdgeCorrelation> rqaoa_correlations(const Hamiltonian& h,
                                                const OrbitPartition& orbits,
                                                const QaoaParams& params,
                                                const EvalConfig& cfg = {});

/// Quadratic instance in coupling-graph form with an accumulated scalar.
struct IsingInstance {
  Graph graph;
  double offset = 0.0;
};

IsingInstance ising_from_hamiltonian(const Hamiltonian& h);
Hamiltonian hamiltonian_from_ising(const IsingInstance& inst);

/// Constraint record in original variable indices: z_j = sign * z_i.
struct EliminationStep {
  int i = 0;
  int j = 0;
  int sign = 1;
  double correlation = 0.0;
};

struct Elimination {
  IsingInstance instance;
  std::vector<int> cur_to_orig;
  EliminationStep step;
};

/// Substitutes z_j := sign * z_i (j the larger endpoint of `edge`): the edge
/// itself folds into the offset, edges at j rewire to i with sign-adjusted
/// couplings (cancelled couplings are dropped), and the variable range is
/// reindexed densely. `cur_to_orig` maps current to original indices and is
/// carried through the reindexing.
Elimination eliminate_variable(const IsingInstance& inst,
                               std::pair<int, int> edge, int sign,
                               double correlation,
                               const std::vector<int>& cur_to_orig);

struct RqaoaConfig {
  int p = 1;
  int n_cutoff = 2;
  OptimizerConfig opt;
  EvalConfig eval;
  SymmetryConfig sym;
  bool use_partial_generators_on_timeout = false;
  /// When all correlations vanish, pick the lexicographically smallest edge
  /// with sign +1 instead of failing.
  bool allow_degenerate_elimination = false;
};

struct RqaoaResult {
  std::vector<EliminationStep> steps;
  std::vector<std::uint8_t> final_assignment;  // bit j of original variable j
  double objective_value = 0.0;
};

/// Recursive elimination: per round, recompute symmetries of the current
/// weighted instance, optimize parameters, take the edge with the largest
/// |correlation| (lexicographic tie-break), and eliminate its larger
/// endpoint; the remnant (<= n_cutoff variables) is brute-forced and the
/// constraints are back-substituted into a full assignment.
RqaoaResult rqaoa_run(const Hamiltonian& instance, const RqaoaConfig& cfg = {});

/// Exhaustive maximization (n <= 24); returns the lexicographically smallest
/// maximizing bitstring and its value.
std::pair<std::vector<std::uint8_t>, double> brute_force_opt(
    const Hamiltonian& h);

}  // namespace symqaoa
