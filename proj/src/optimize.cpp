#include "symqaoa/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "symqaoa/errors.hpp"
#include "symqaoa/parallel.hpp"

namespace symqaoa {

namespace {

constexpr double kPi = 3.14159265358979323846;

QaoaParams unpack(const std::vector<double>& x, int p) {
  QaoaParams prm;
  prm.p = p;
  prm.betas.assign(x.begin(), x.begin() + p);
  prm.gammas.assign(x.begin() + p, x.end());
  return prm;
}

/// Deterministic Nelder-Mead ascent. `f` returns the objective to maximize.
template <typename F>
void nelder_mead(F&& f, std::vector<double> x0, int max_iters, double ftol,
                 double step) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> xs(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += step;
  std::vector<double> fs(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fs[i] = -f(xs[i]);

  auto order = [&] {
    std::vector<std::size_t> idx(dim + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    std::vector<std::vector<double>> nxs(dim + 1);
    std::vector<double> nfs(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      nxs[i] = std::move(xs[idx[i]]);
      nfs[i] = fs[idx[i]];
    }
    xs = std::move(nxs);
    fs = std::move(nfs);
  };

  for (int iter = 0; iter < max_iters; ++iter) {
    order();
    if (std::abs(fs[dim] - fs[0]) < ftol) break;
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += xs[i][d];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto blend = [&](double a, double b) {
      std::vector<double> y(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        y[d] = a * centroid[d] + b * xs[dim][d];
      }
      return y;
    };

    const std::vector<double> xr = blend(2.0, -1.0);
    const double fr = -f(xr);
    if (fr < fs[0]) {
      const std::vector<double> xe = blend(3.0, -2.0);
      const double fe = -f(xe);
      if (fe < fr) {
        xs[dim] = xe;
        fs[dim] = fe;
      } else {
        xs[dim] = xr;
        fs[dim] = fr;
      }
      continue;
    }
    if (fr < fs[dim - 1]) {
      xs[dim] = xr;
      fs[dim] = fr;
      continue;
    }
    if (fr < fs[dim]) {
      const std::vector<double> xc = blend(1.5, -0.5);  // outside contraction
      const double fc = -f(xc);
      if (fc <= fr) {
        xs[dim] = xc;
        fs[dim] = fc;
        continue;
      }
    } else {
      const std::vector<double> xc = blend(0.5, 0.5);  // inside contraction
      const double fc = -f(xc);
      if (fc < fs[dim]) {
        xs[dim] = xc;
        fs[dim] = fc;
        continue;
      }
    }
    for (std::size_t i = 1; i <= dim; ++i) {  // shrink toward the best vertex
      for (std::size_t d = 0; d < dim; ++d) {
        xs[i][d] = xs[0][d] + 0.5 * (xs[i][d] - xs[0][d]);
      }
      fs[i] = -f(xs[i]);
    }
  }
}

std::vector<std::vector<double>> grid_seeds(int p, const OptimizerConfig& cfg) {
  const int g = std::max(1, cfg.grid_points_per_angle);
  const int dims = 2 * p;
  auto coord = [&](int d, int k) {
    const double span = d < p ? kPi / 2.0 : kPi;  // betas first, then gammas
    return span * static_cast<double>(k) / static_cast<double>(g);
  };
  double combos = 1.0;
  for (int d = 0; d < dims; ++d) combos *= g;
  std::vector<std::vector<double>> seeds;
  if (combos <= static_cast<double>(cfg.max_grid_evals)) {
    std::vector<int> idx(dims, 0);
    for (;;) {
      std::vector<double> x(dims);
      for (int d = 0; d < dims; ++d) x[d] = coord(d, idx[d]);
      seeds.push_back(std::move(x));
      int d = dims - 1;
      while (d >= 0 && ++idx[d] == g) idx[d--] = 0;
      if (d < 0) break;
    }
    return seeds;
  }
  // High depth: sample grid points instead of enumerating g^(2p) of them.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, g - 1);
  seeds.reserve(cfg.max_grid_evals);
  for (int s = 0; s < cfg.max_grid_evals; ++s) {
    std::vector<double> x(dims);
    for (int d = 0; d < dims; ++d) x[d] = coord(d, pick(rng));
    seeds.push_back(std::move(x));
  }
  return seeds;
}

}  // namespace

OptResult optimize_params(const Hamiltonian& h, const OrbitPartition* orbits,
                          int p, const OptimizerConfig& ocfg,
                          const EvalConfig& ecfg) {
  if (p < 1) throw std::invalid_argument("depth p must be >= 1");
  OptResult result;
  ExpectationCache cache;
  auto evaluate = [&](const std::vector<double>& x) {
    const QaoaParams prm = unpack(x, p);
    const EnergyReport rep = orbits
                                 ? reduced_energy(h, *orbits, prm, ecfg, &cache)
                                 : full_energy(h, prm, ecfg, &cache);
    result.trace.emplace_back(prm, rep.energy);
    return rep.energy;
  };

  const std::vector<std::vector<double>> seeds = grid_seeds(p, ocfg);
  std::vector<double> seed_energy(seeds.size());
  for (std::size_t s = 0; s < seeds.size(); ++s) seed_energy[s] = evaluate(seeds[s]);

  std::vector<std::size_t> ranked(seeds.size());
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    return seed_energy[a] > seed_energy[b];
  });
  const std::size_t top =
      std::min<std::size_t>(std::max(1, ocfg.refine_top_k), ranked.size());
  for (std::size_t k = 0; k < top; ++k) {
    nelder_mead(evaluate, seeds[ranked[k]], ocfg.nm_max_iters, ocfg.nm_ftol,
                ocfg.nm_step);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.trace.size(); ++i) {
    if (result.trace[i].second > result.trace[best].second) best = i;
  }
  result.best_params = result.trace[best].first;
  result.best_energy = result.trace[best].second;
  result.n_evaluations = static_cast<long>(result.trace.size());
  return result;
}

std::vector<EdgeCorrelation> rqaoa_correlations(const Hamiltonian& h,
                                                const OrbitPartition& orbits,
                                                const QaoaParams& params,
                                                const EvalConfig& cfg) {
  validate_params(params);
  for (const Term& t : h.terms) {
    if (t.support.size() != 2) {
      throw std::invalid_argument("correlations require a quadratic instance");
    }
  }
  std::vector<double> class_value(orbits.classes.size());
  parallel_for(orbits.classes.size(), cfg.n_threads, [&](std::size_t c) {
    const OrbitClass& cls = orbits.classes[c];
    class_value[c] = term_expectation(h, {cls.representative, cls.coeff},
                                      params, cfg.width_guard);
  });
  std::map<std::vector<int>, double> value_of;
  for (std::size_t c = 0; c < orbits.classes.size(); ++c) {
    for (const std::vector<int>& m : orbits.classes[c].members) {
      value_of[m] = class_value[c];
    }
  }
  std::vector<EdgeCorrelation> out;
  out.reserve(h.terms.size());
  for (const Term& t : h.terms) {
    auto it = value_of.find(t.support);
    if (it == value_of.end()) {
      throw std::invalid_argument(
          "orbit partition does not cover every Hamiltonian term");
    }
    out.push_back({t.support[0], t.support[1], it->second});
  }
  return out;
}

IsingInstance ising_from_hamiltonian(const Hamiltonian& h) {
  validate_hamiltonian(h);
  IsingInstance inst;
  inst.offset = h.offset;
  inst.graph.n_vertices = h.n_qubits;
  for (const Term& t : h.terms) {
    if (t.support.size() != 2) {
      throw std::invalid_argument("instance must be quadratic");
    }
    inst.graph.edges.push_back({t.support[0], t.support[1], t.coeff});
  }
  validate_graph(inst.graph);
  return inst;
}

Hamiltonian hamiltonian_from_ising(const IsingInstance& inst) {
  Hamiltonian h = build_ising(inst.graph);
  h.offset = inst.offset;
  return h;
}

Elimination eliminate_variable(const IsingInstance& inst,
                               std::pair<int, int> edge, int sign,
                               double correlation,
                               const std::vector<int>& cur_to_orig) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  const int i = std::min(edge.first, edge.second);
  const int j = std::max(edge.first, edge.second);
  const Edge* chosen = nullptr;
  for (const Edge& e : inst.graph.edges) {
    if (e.u == i && e.v == j) {
      chosen = &e;
      break;
    }
  }
  if (!chosen) {
    throw std::invalid_argument("edge (" + std::to_string(i) + "," +
                                std::to_string(j) + ") not in the instance");
  }

  Elimination out;
  out.instance.offset = inst.offset + sign * chosen->w;
  out.step = {cur_to_orig[i], cur_to_orig[j], sign, correlation};

  std::map<std::pair<int, int>, double> acc;
  for (const Edge& e : inst.graph.edges) {
    if (e.u == i && e.v == j) continue;
    int a = e.u;
    int b = e.v;
    double w = e.w;
    if (a == j) {
      a = i;
      w *= sign;
    } else if (b == j) {
      b = i;
      w *= sign;
    }
    if (a > b) std::swap(a, b);
    acc[{a, b}] += w;
  }
  out.instance.graph.n_vertices = inst.graph.n_vertices - 1;
  for (const auto& [uv, w] : acc) {
    if (w == 0.0) continue;
    const int a = uv.first > j ? uv.first - 1 : uv.first;
    const int b = uv.second > j ? uv.second - 1 : uv.second;
    out.instance.graph.edges.push_back({a, b, w});
  }
  validate_graph(out.instance.graph);
  out.cur_to_orig = cur_to_orig;
  out.cur_to_orig.erase(out.cur_to_orig.begin() + j);
  return out;
}

std::pair<std::vector<std::uint8_t>, double> brute_force_opt(
    const Hamiltonian& h) {
  if (h.n_qubits > 24) {
    throw ResourceGuardError("brute-force maximization limited to 24 qubits",
                             {}, h.n_qubits, 24);
  }
  const int n = h.n_qubits;
  if (n == 0) return {{}, h.offset};
  std::vector<std::uint64_t> masks;
  std::vector<double> coeffs;
  for (const Term& t : h.terms) {
    std::uint64_t m = 0;
    for (int q : t.support) m |= std::uint64_t{1} << q;
    masks.push_back(m);
    coeffs.push_back(t.coeff);
  }
  double best_value = -std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
  // Counting with qubit 0 as the most significant digit makes the first
  // strict maximum the lexicographically smallest maximizer.
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    std::uint64_t mask = 0;
    for (int j = 0; j < n; ++j) {
      if (c & (std::uint64_t{1} << (n - 1 - j))) mask |= std::uint64_t{1} << j;
    }
    double value = h.offset;
    for (std::size_t t = 0; t < masks.size(); ++t) {
      value += (std::popcount(mask & masks[t]) & 1) ? -coeffs[t] : coeffs[t];
    }
    if (value > best_value) {
      best_value = value;
      best_mask = mask;
    }
  }
  std::vector<std::uint8_t> bits(n);
  for (int j = 0; j < n; ++j) bits[j] = (best_mask >> j) & 1;
  return {bits, best_value};
}

RqaoaResult rqaoa_run(const Hamiltonian& instance, const RqaoaConfig& cfg) {
  if (cfg.n_cutoff < 1) throw std::invalid_argument("n_cutoff must be >= 1");
  IsingInstance cur = ising_from_hamiltonian(instance);
  std::vector<int> cur_to_orig(instance.n_qubits);
  std::iota(cur_to_orig.begin(), cur_to_orig.end(), 0);

  RqaoaResult result;
  int round = 0;
  while (cur.graph.n_vertices > cfg.n_cutoff && !cur.graph.edges.empty()) {
    GeneratorSet gens;
    try {
      gens = graph_symmetries(cur.graph, cfg.sym);
    } catch (const SolverTimeout& timeout) {
      gens = cfg.use_partial_generators_on_timeout
                 ? timeout.partial_generators()
                 : GeneratorSet{cur.graph.n_vertices, {}};
    }
    const Hamiltonian hc = hamiltonian_from_ising(cur);
    const OrbitPartition orbits = term_orbits(gens, hc);
    OptimizerConfig ocfg = cfg.opt;
    ocfg.seed = cfg.opt.seed + static_cast<std::uint64_t>(round);
    const OptResult opt = optimize_params(hc, &orbits, cfg.p, ocfg, cfg.eval);
    const std::vector<EdgeCorrelation> corrs =
        rqaoa_correlations(hc, orbits, opt.best_params, cfg.eval);

    std::size_t pick = 0;
    for (std::size_t k = 1; k < corrs.size(); ++k) {
      const double mk = std::abs(corrs[k].value);
      const double mp = std::abs(corrs[pick].value);
      const auto ek = std::make_pair(corrs[k].i, corrs[k].j);
      const auto ep = std::make_pair(corrs[pick].i, corrs[pick].j);
      if (mk > mp || (mk == mp && ek < ep)) pick = k;
    }
    int sign;
    if (std::abs(corrs[pick].value) < 1e-12) {
      if (!cfg.allow_degenerate_elimination) {
        throw DegenerateCorrelationsError(
            "all edge correlations vanish at the optimized parameters; no "
            "variable can be meaningfully eliminated");
      }
      pick = 0;  // term order starts at the lexicographically smallest edge
      for (std::size_t k = 1; k < corrs.size(); ++k) {
        if (std::make_pair(corrs[k].i, corrs[k].j) <
            std::make_pair(corrs[pick].i, corrs[pick].j)) {
          pick = k;
        }
      }
      sign = 1;
    } else {
      sign = corrs[pick].value > 0 ? 1 : -1;
    }
    Elimination el =
        eliminate_variable(cur, {corrs[pick].i, corrs[pick].j}, sign,
                           corrs[pick].value, cur_to_orig);
    cur = std::move(el.instance);
    cur_to_orig = std::move(el.cur_to_orig);
    result.steps.push_back(el.step);
    ++round;
  }

  const auto [remnant_bits, remnant_value] =
      brute_force_opt(hamiltonian_from_ising(cur));
  result.final_assignment.assign(instance.n_qubits, 0);
  for (int k = 0; k < cur.graph.n_vertices; ++k) {
    result.final_assignment[cur_to_orig[k]] = remnant_bits[k];
  }
  for (auto it = result.steps.rbegin(); it != result.steps.rend(); ++it) {
    const std::uint8_t zi = result.final_assignment[it->i];
    result.final_assignment[it->j] = it->sign < 0 ? (zi ^ 1) : zi;
  }
  result.objective_value = eval_classical(instance, result.final_assignment);
  if (std::abs(result.objective_value - remnant_value) > 1e-9) {
    throw ConsistencyError(
        "back-substituted assignment does not reproduce the reduced objective");
  }
  return result;
}

}  // namespace symqaoa
