#include "symqaoa/energy.hpp"

#include <algorithm>
#include <stdexcept>

#include "symqaoa/parallel.hpp"

namespace symqaoa {

std::string to_string(EnergyMode mode) {
  return mode == EnergyMode::full ? "full" : "reduced";
}

std::optional<double> ExpectationCache::lookup(const std::vector<int>& support,
                                               const QaoaParams& params) const {
  auto it = map_.find({support, params.betas, params.gammas});
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void ExpectationCache::store(const std::vector<int>& support,
                             const QaoaParams& params, double value) {
  map_.insert_or_assign({support, params.betas, params.gammas}, value);
}

namespace {

/// Evaluates expectations for a list of (support, coeff) jobs: cache lookups
/// are serial, misses are simulated on the pool, results land per index.
struct JobResult {
  double expectation = 0.0;
  int cone_width = 0;
};

std::vector<JobResult> evaluate_supports(const Hamiltonian& h,
                                         const std::vector<Term>& jobs,
                                         const QaoaParams& params,
                                         const EvalConfig& cfg,
                                         ExpectationCache* cache) {
  std::vector<JobResult> results(jobs.size());
  std::vector<std::size_t> misses;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    results[i].cone_width = cone(h, jobs[i], params.p).width();
    if (cache) {
      if (auto hit = cache->lookup(jobs[i].support, params)) {
        results[i].expectation = *hit;
        continue;
      }
    }
    misses.push_back(i);
  }
  parallel_for(misses.size(), cfg.n_threads, [&](std::size_t k) {
    const std::size_t i = misses[k];
    results[i].expectation =
        term_expectation(h, jobs[i], params, cfg.width_guard);
  });
  if (cache) {
    for (std::size_t i : misses) {
      cache->store(jobs[i].support, params, results[i].expectation);
    }
  }
  return results;
}

}  // namespace

EnergyReport full_energy(const Hamiltonian& h, const QaoaParams& params,
                         const EvalConfig& cfg, ExpectationCache* cache) {
  validate_params(params);
  const std::vector<JobResult> results =
      evaluate_supports(h, h.terms, params, cfg, cache);
  EnergyReport report;
  report.mode = EnergyMode::full;
  report.n_terms_evaluated = static_cast<int>(h.terms.size());
  report.energy = h.offset;
  report.per_class.reserve(h.terms.size());
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    report.energy += h.terms[i].coeff * results[i].expectation;
    report.per_class.push_back(
        {h.terms[i].support, 1, results[i].expectation, results[i].cone_width});
  }
  return report;
}

EnergyReport reduced_energy(const Hamiltonian& h, const OrbitPartition& orbits,
                            const QaoaParams& params, const EvalConfig& cfg,
                            ExpectationCache* cache) {
  validate_params(params);
  // A stale partition would silently corrupt the energy; verify coverage.
  std::map<std::vector<int>, double> remaining;
  for (const Term& t : h.terms) remaining.emplace(t.support, t.coeff);
  for (const OrbitClass& cls : orbits.classes) {
    if (cls.multiplicity != static_cast<int>(cls.members.size())) {
      throw std::invalid_argument("orbit class multiplicity != member count");
    }
    for (const std::vector<int>& m : cls.members) {
      auto it = remaining.find(m);
      if (it == remaining.end()) {
        throw std::invalid_argument(
            "orbit partition does not match the Hamiltonian term set");
      }
      if (it->second != cls.coeff) {
        throw std::invalid_argument(
            "orbit class coefficient differs from the term coefficient");
      }
      remaining.erase(it);
    }
  }
  if (!remaining.empty()) {
    throw std::invalid_argument(
        "orbit partition does not cover every Hamiltonian term");
  }

  std::vector<Term> reps;
  reps.reserve(orbits.classes.size());
  for (const OrbitClass& cls : orbits.classes) {
    reps.push_back({cls.representative, cls.coeff});
  }
  const std::vector<JobResult> results =
      evaluate_supports(h, reps, params, cfg, cache);
  EnergyReport report;
  report.mode = EnergyMode::reduced;
  report.n_terms_evaluated = static_cast<int>(orbits.classes.size());
  report.energy = h.offset;
  report.per_class.reserve(orbits.classes.size());
  for (std::size_t i = 0; i < orbits.classes.size(); ++i) {
    const OrbitClass& cls = orbits.classes[i];
    report.energy += cls.multiplicity * cls.coeff * results[i].expectation;
    report.per_class.push_back({cls.representative, cls.multiplicity,
                                results[i].expectation,
                                results[i].cone_width});
  }
  return report;
}

double estimate_full_time(double t_actual_s, long n_processed,
                          long n_total_terms) {
  if (n_processed < 1) throw std::invalid_argument("no processed terms");
  return t_actual_s * static_cast<double>(n_total_terms) /
         static_cast<double>(n_processed);
}

}  // namespace symqaoa
