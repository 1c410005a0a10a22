#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "symqaoa/hamiltonian.hpp"
#include "symqaoa/lightcone.hpp"
#include "symqaoa/simulator.hpp"
#include "symqaoa/symmetry.hpp"

namespace symqaoa {

struct EvalConfig {
  int width_guard = kDefaultWidthGuard;
  int n_threads = 0;  // 0 = auto
};

enum class EnergyMode { full, reduced };

std::string to_string(EnergyMode mode);

struct ClassReport {
  std::vector<int> rep;
  int multiplicity = 1;
  double expectation = 0.0;
  int cone_width = 0;
};

struct EnergyReport {
  double energy = 0.0;
  int n_terms_evaluated = 0;
  std::vector<ClassReport> per_class;
  EnergyMode mode = EnergyMode::full;
};

/// Exact memo of term expectations keyed by (support, angles). Entries hit
/// only on bit-identical parameters; intended for one optimizer run.
class ExpectationCache {
 public:
  std::optional<double> lookup(const std::vector<int>& support,
                               const QaoaParams& params) const;
  void store(const std::vector<int>& support, const QaoaParams& params,
             double value);
  std::size_t size() const { return map_.size(); }

 private:
  using Key = std::tuple<std::vector<int>, std::vector<double>,
                         std::vector<double>>;
  std::map<Key, double> map_;
};

/// Energy via one cone simulation per term. Summation order is the term
/// order, independent of the worker pool.
EnergyReport full_energy(const Hamiltonian& h, const QaoaParams& params,
                         const EvalConfig& cfg = {},
                         ExpectationCache* cache = nullptr);

/// Energy via one cone simulation per orbit class, each expectation
/// weighted by the class multiplicity. Verifies that the partition covers
/// exactly the Hamiltonian's terms before simulating anything.
EnergyReport reduced_energy(const Hamiltonian& h, const OrbitPartition& orbits,
                            const QaoaParams& params,
                            const EvalConfig& cfg = {},
                            ExpectationCache* cache = nullptr);

/// Linear extrapolation of a partial run: t_actual * n_total / n_processed.
double estimate_full_time(double t_actual_s, long n_processed,
                          long n_total_terms);

}  // namespace symqaoa
