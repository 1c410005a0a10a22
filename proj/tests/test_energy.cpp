#include <doctest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "support/reference.hpp"
#include "symqaoa/energy.hpp"

using namespace symqaoa;
namespace fx = symqaoa::testing;

namespace {

OrbitPartition instance_orbits(const Graph& g, const Hamiltonian& h) {
  return term_orbits(graph_symmetries(g), h);
}

}  // namespace

TEST_CASE("full_energy at gamma = 0 reduces to the offset") {
  const Hamiltonian h = build_maxcut(fx::cycle_graph(3));
  const EnergyReport r = full_energy(h, QaoaParams{1, {0.7}, {0.0}});
  CHECK(r.energy == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(r.n_terms_evaluated == 3);
  CHECK(r.mode == EnergyMode::full);
}

TEST_CASE("full_energy of an edgeless instance is the offset") {
  const Hamiltonian h = build_ising(make_graph(5, {}));
  const EnergyReport r = full_energy(h, QaoaParams{2, {0.1, 0.2}, {0.3, 0.4}});
  CHECK(r.energy == 0.0);
  CHECK(r.n_terms_evaluated == 0);
}

TEST_CASE("full_energy equals the reference on random instances") {
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = fx::random_gnm(9, 13, 7000 + trial);
    const Hamiltonian h = build_maxcut(g);
    const QaoaParams prm = fx::random_params(1 + trial % 3, 5100 + trial);
    CHECK(full_energy(h, prm).energy ==
          doctest::Approx(fx::reference_energy(h, prm)).epsilon(1e-9));
  }
}

TEST_CASE("reduced_energy evaluates one simulation per class") {
  const Graph g = fx::cycle_graph(3);
  const Hamiltonian h = build_maxcut(g);
  const OrbitPartition orbits = instance_orbits(g, h);
  REQUIRE(orbits.classes.size() == 1);
  const QaoaParams prm{1, {0.37}, {0.59}};
  const EnergyReport reduced = reduced_energy(h, orbits, prm);
  const EnergyReport full = full_energy(h, prm);
  CHECK(reduced.n_terms_evaluated == 1);
  CHECK(full.n_terms_evaluated == 3);
  CHECK(reduced.energy == doctest::Approx(full.energy).epsilon(1e-12));
  CHECK(reduced.per_class.size() == 1);
  CHECK(reduced.per_class[0].multiplicity == 3);
}

TEST_CASE("reduced_energy with singleton classes equals full_energy") {
  const Hamiltonian h = build_maxcut(fx::random_gnm(8, 12, 88));
  const QaoaParams prm = fx::random_params(2, 31);
  const EnergyReport reduced = reduced_energy(h, trivial_orbits(h), prm);
  const EnergyReport full = full_energy(h, prm);
  CHECK(reduced.n_terms_evaluated == full.n_terms_evaluated);
  CHECK(reduced.energy == doctest::Approx(full.energy).epsilon(1e-12));
}

TEST_CASE("orbit-reduced energy matches full energy across instances") {
  std::vector<Graph> graphs = {
      fx::cycle_graph(8),        fx::complete_graph(6), fx::star_graph(6),
      fx::torus_grid({3, 4}),    fx::petersen_graph(),  fx::random_gnm(10, 15, 2),
      fx::complete_bipartite(3, 4)};
  for (const Graph& g : graphs) {
    const Hamiltonian h = build_maxcut(g);
    const OrbitPartition orbits = instance_orbits(g, h);
    for (int p = 1; p <= 3; ++p) {
      for (int draw = 0; draw < 4; ++draw) {
        const QaoaParams prm = fx::random_params(p, 8800 + 17 * p + draw);
        const double full = full_energy(h, prm).energy;
        const double reduced = reduced_energy(h, orbits, prm).energy;
        CHECK(std::abs(full - reduced) < 1e-9);
      }
    }
  }
}

TEST_CASE("orbit mates share their expectation value") {
  const Graph g = fx::torus_grid({2, 3});
  const Hamiltonian h = build_maxcut(g);
  const OrbitPartition orbits = instance_orbits(g, h);
  const QaoaParams prm = fx::random_params(2, 4321);
  for (const OrbitClass& cls : orbits.classes) {
    const double rep_value =
        term_expectation(h, {cls.representative, cls.coeff}, prm);
    for (const auto& member : cls.members) {
      CHECK(term_expectation(h, {member, cls.coeff}, prm) ==
            doctest::Approx(rep_value).epsilon(1e-9));
    }
  }
}

TEST_CASE("reduced_energy validates the partition") {
  const Graph g = fx::cycle_graph(4);
  const Hamiltonian h = build_maxcut(g);
  const QaoaParams prm{1, {0.1}, {0.2}};
  SUBCASE("partition from another instance is rejected") {
    const Hamiltonian other = build_maxcut(fx::cycle_graph(5));
    CHECK_THROWS_AS(reduced_energy(h, trivial_orbits(other), prm),
                    std::invalid_argument);
  }
  SUBCASE("missing class is rejected") {
    OrbitPartition orbits = trivial_orbits(h);
    orbits.classes.pop_back();
    CHECK_THROWS_AS(reduced_energy(h, orbits, prm), std::invalid_argument);
  }
  SUBCASE("wrong coefficient is rejected") {
    OrbitPartition orbits = trivial_orbits(h);
    orbits.classes[0].coeff = 99.0;
    CHECK_THROWS_AS(reduced_energy(h, orbits, prm), std::invalid_argument);
  }
}

TEST_CASE("energies are independent of the worker count") {
  const Hamiltonian h = build_maxcut(fx::random_gnm(10, 16, 321));
  const QaoaParams prm = fx::random_params(2, 99);
  EvalConfig one;
  one.n_threads = 1;
  EvalConfig four;
  four.n_threads = 4;
  CHECK(full_energy(h, prm, one).energy == full_energy(h, prm, four).energy);
}

TEST_CASE("expectation cache is exact and reused") {
  const Hamiltonian h = build_maxcut(fx::cycle_graph(6));
  const QaoaParams prm{1, {0.25}, {0.5}};
  ExpectationCache cache;
  const EnergyReport first = full_energy(h, prm, {}, &cache);
  CHECK(cache.size() == h.terms.size());
  const EnergyReport second = full_energy(h, prm, {}, &cache);
  CHECK(first.energy == second.energy);  // bit-identical via the cache
  QaoaParams other = prm;
  other.gammas[0] += 1e-16;  // any bit change misses
  CHECK(cache.lookup(h.terms[0].support, other) == std::nullopt);
}

TEST_CASE("estimate_full_time extrapolates linearly") {
  CHECK(estimate_full_time(100.0, 50, 200) == doctest::Approx(400.0));
  CHECK(estimate_full_time(3.5, 40, 40) == doctest::Approx(3.5));
  CHECK(estimate_full_time(72000.0, 1000, 108112) ==
        doctest::Approx(7.78e6).epsilon(1e-3));
  CHECK_THROWS_AS(estimate_full_time(1.0, 0, 10), std::invalid_argument);
}
