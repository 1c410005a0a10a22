#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symqaoa/graph.hpp"
#include "symqaoa/hamiltonian.hpp"

namespace symqaoa {

/// Vertex permutation stored as an image array: position i maps to images[i].
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  int operator()(int v) const { return images[v]; }
  bool is_identity() const;
  Permutation inverse() const;
  /// (a.compose(b))(v) == a(b(v)).
  Permutation compose(const Permutation& b) const;
  /// Image of a sorted index set under the induced set action, sorted.
  std::vector<int> apply_to_support(std::span<const int> support) const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }
};

void validate_permutation(const Permutation& p);

struct GeneratorSet {
  int n = 0;
  std::vector<Permutation> generators;
};

/// Graph plus a dense vertex coloring; automorphisms must fix each color
/// class setwise and preserve edge weights exactly.
struct ColoredGraph {
  Graph graph;
  std::vector<int> vertex_colors;
};

ColoredGraph uniform_coloring(const Graph& g);

bool is_automorphism(const ColoredGraph& cg, const Permutation& p);

using VertexPartition = std::vector<std::vector<int>>;

/// Initial partition induced by vertex colors, cells ordered by color id.
VertexPartition color_partition(const ColoredGraph& cg);

/// Coarsest equitable refinement of `initial`: within every cell, all
/// vertices see the same multiset of (cell, weight-class) neighbor pairs.
/// Cell order is deterministic and label-independent; split cells are
/// replaced in place by their fragments in ascending signature order.
VertexPartition refine(const ColoredGraph& cg, VertexPartition initial);

struct AutomorphismSearchOptions {
  double time_budget_s = 600.0;
};

/// Search exceeded its wall-clock budget; carries whatever verified
/// generators were found before the deadline.
class SolverTimeout : public std::runtime_error {
 public:
  SolverTimeout(const std::string& what, GeneratorSet partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const GeneratorSet& partial_generators() const { return partial_; }

 private:
  GeneratorSet partial_;
};

/// Individualization-refinement backtracking search for generators of the
/// full color- and weight-preserving automorphism group. Every returned
/// permutation has been verified against is_automorphism. Throws
/// SolverTimeout when the budget expires.
GeneratorSet automorphism_generators(
    const ColoredGraph& cg, const AutomorphismSearchOptions& opts = {});

/// Exhaustive oracle: filters all n! permutations (n <= 10) and returns the
/// complete group listing, identity included.
GeneratorSet brute_force_automorphisms(const ColoredGraph& cg);

/// Edge-weight colors moved onto vertices: every edge (u,v,w) is subdivided
/// by a fresh vertex adjacent to u and v, colored 1 + weight-class of w;
/// original vertices keep color 0. When all weights are equal the original
/// graph is returned unchanged with a uniform coloring. back_map sends
/// gadget indices to original indices (-1 for subdivision vertices).
struct WeightedGadget {
  ColoredGraph colored;
  std::vector<int> back_map;
};

WeightedGadget weighted_gadget(const Graph& g);

/// Restriction of gadget generators to the original vertices.
GeneratorSet restrict_to_original(const GeneratorSet& gadget_gens,
                                  const std::vector<int>& back_map,
                                  int n_original);

struct SymmetryConfig {
  double time_budget_s = 600.0;
};

/// Generators of the weight-preserving automorphism group of `g`, routed
/// through the subdivision gadget when weights are non-uniform. Throws
/// SolverTimeout (with restricted partial generators) on budget expiry.
GeneratorSet graph_symmetries(const Graph& g, const SymmetryConfig& cfg = {});

/// Equivalence classes of Hamiltonian terms under the induced set action of
/// the generated group, with deterministic lexicographic representatives.
struct OrbitClass {
  std::vector<int> representative;
  std::vector<std::vector<int>> members;
  int multiplicity = 0;
  double coeff = 0.0;
};

struct OrbitPartition {
  std::vector<OrbitClass> classes;
};

/// Union-find closure of the generator action on term supports. Throws
/// std::invalid_argument if a generator maps a term outside the term set or
/// connects terms with different coefficients (the generators then do not
/// respect the weighted instance; route through weighted_gadget).
OrbitPartition term_orbits(const GeneratorSet& gens, const Hamiltonian& h);

/// One singleton class per term (the no-symmetry fallback).
OrbitPartition trivial_orbits(const Hamiltonian& h);

/// Orbit closure of the generator action on vertices, classes sorted.
std::vector<std::vector<int>> vertex_orbits(const GeneratorSet& gens);

/// Explicit group elements generated by closure, identity included.
/// Throws ResourceGuardError if the group exceeds `cap` elements.
std::vector<Permutation> enumerate_group(const GeneratorSet& gens,
                                         std::size_t cap = 1000000);

}  // namespace symqaoa
