#include "symqaoa/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "symqaoa/errors.hpp"

namespace symqaoa {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images.resize(images.size());
  for (int i = 0; i < size(); ++i) inv.images[images[i]] = i;
  return inv;
}

Permutation Permutation::compose(const Permutation& b) const {
  Permutation r;
  r.images.resize(images.size());
  for (int i = 0; i < size(); ++i) r.images[i] = images[b.images[i]];
  return r;
}

std::vector<int> Permutation::apply_to_support(
    std::span<const int> support) const {
  std::vector<int> img;
  img.reserve(support.size());
  for (int j : support) img.push_back(images[j]);
  std::sort(img.begin(), img.end());
  return img;
}

void validate_permutation(const Permutation& p) {
  std::vector<char> hit(p.images.size(), 0);
  for (int v : p.images) {
    if (v < 0 || v >= p.size() || hit[v]) {
      throw std::invalid_argument("permutation is not a bijection");
    }
    hit[v] = 1;
  }
}

ColoredGraph uniform_coloring(const Graph& g) {
  return {g, std::vector<int>(g.n_vertices, 0)};
}

namespace {

std::int64_t edge_key(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return static_cast<std::int64_t>(u) * n + v;
}

struct AdjEntry {
  int nbr;
  int wclass;
};

/// Preprocessed view used by refinement, search and verification.
struct SearchGraph {
  int n = 0;
  std::vector<std::vector<AdjEntry>> adj;
  std::vector<int> colors;
  std::unordered_map<std::int64_t, double> weight_of;

  explicit SearchGraph(const ColoredGraph& cg) {
    n = cg.graph.n_vertices;
    if (static_cast<int>(cg.vertex_colors.size()) != n) {
      throw std::invalid_argument("vertex color array length != n");
    }
    colors = cg.vertex_colors;
    adj.resize(n);
    const std::vector<int> wc = edge_weight_class_ids(cg.graph);
    for (std::size_t e = 0; e < cg.graph.edges.size(); ++e) {
      const Edge& ed = cg.graph.edges[e];
      adj[ed.u].push_back({ed.v, wc[e]});
      adj[ed.v].push_back({ed.u, wc[e]});
      weight_of.emplace(edge_key(ed.u, ed.v, n), ed.w);
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end(),
                [](const AdjEntry& x, const AdjEntry& y) { return x.nbr < y.nbr; });
    }
  }
};

bool is_automorphism_impl(const SearchGraph& sg, const Graph& g,
                          const Permutation& p) {
  if (p.size() != sg.n) return false;
  for (int v = 0; v < sg.n; ++v) {
    if (sg.colors[p(v)] != sg.colors[v]) return false;
  }
  for (const Edge& e : g.edges) {
    auto it = sg.weight_of.find(edge_key(p(e.u), p(e.v), sg.n));
    if (it == sg.weight_of.end() || it->second != e.w) return false;
  }
  return true;
}

using Signature = std::vector<std::pair<int, int>>;  // sorted (cell, wclass)

/// One pass of simultaneous splitting; returns true if any cell split.
bool refine_pass(const SearchGraph& sg, VertexPartition& cells) {
  std::vector<int> cell_of(sg.n, -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
  }
  std::vector<Signature> sig(sg.n);
  for (int v = 0; v < sg.n; ++v) {
    Signature s;
    s.reserve(sg.adj[v].size());
    for (const AdjEntry& a : sg.adj[v]) s.emplace_back(cell_of[a.nbr], a.wclass);
    std::sort(s.begin(), s.end());
    sig[v] = std::move(s);
  }
  VertexPartition next;
  next.reserve(cells.size());
  bool split = false;
  for (const std::vector<int>& cell : cells) {
    if (cell.size() == 1) {
      next.push_back(cell);
      continue;
    }
    std::map<Signature, std::vector<int>> groups;
    for (int v : cell) groups[sig[v]].push_back(v);
    if (groups.size() > 1) split = true;
    for (auto& [s, members] : groups) {
      (void)s;
      std::sort(members.begin(), members.end());
      next.push_back(std::move(members));
    }
  }
  cells = std::move(next);
  return split;
}

VertexPartition refine_impl(const SearchGraph& sg, VertexPartition cells) {
  while (refine_pass(sg, cells)) {
  }
  return cells;
}

VertexPartition individualize(const VertexPartition& cells, std::size_t cell_idx,
                              int v) {
  VertexPartition next;
  next.reserve(cells.size() + 1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c != cell_idx) {
      next.push_back(cells[c]);
      continue;
    }
    next.push_back({v});
    std::vector<int> rest;
    rest.reserve(cells[c].size() - 1);
    for (int u : cells[c]) {
      if (u != v) rest.push_back(u);
    }
    next.push_back(std::move(rest));
  }
  return next;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Individualization-refinement automorphism search. The leftmost path is
/// the base; every other leaf yields a candidate mapping the base leaf onto
/// it, verified before acceptance. Base-path nodes iterate all target-cell
/// candidates with orbit pruning under already-found generators fixing the
/// individualized prefix; non-base branches stop at their first verified
/// automorphism (the rest of that branch is generated by the deeper base
/// stabilizer) and are cut early on refinement-shape mismatch.
class AutSearch {
 public:
  AutSearch(const ColoredGraph& cg, const AutomorphismSearchOptions& opts)
      : cg_(cg), sg_(cg), deadline_(std::chrono::steady_clock::now() +
                                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                        std::chrono::duration<double>(opts.time_budget_s))) {}

  GeneratorSet run() {
    GeneratorSet out;
    out.n = sg_.n;
    if (sg_.n == 0) return out;
    search(refine_impl(sg_, color_partition(cg_)), 0, true);
    out.generators = std::move(found_);
    return out;
  }

 private:
  // Returns true when a non-base branch should be abandoned because one
  // verified automorphism was found inside it.
  bool search(VertexPartition cells, std::size_t depth, bool on_base) {
    if ((++nodes_ & 0x3f) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw SolverTimeout("automorphism search exceeded its time budget",
                          GeneratorSet{sg_.n, found_});
    }
    std::vector<std::size_t> shape;
    shape.reserve(cells.size());
    for (const auto& c : cells) shape.push_back(c.size());
    if (on_base) {
      base_shapes_.push_back(std::move(shape));
    } else if (depth >= base_shapes_.size() || shape != base_shapes_[depth]) {
      return false;
    }

    std::size_t target = cells.size();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && cells[c].size() < best) {
        best = cells[c].size();
        target = c;
      }
    }
    if (target == cells.size()) return handle_leaf(cells, on_base);

    const std::vector<int> cand = cells[target];
    if (on_base) {
      std::vector<int> tried;
      for (std::size_t k = 0; k < cand.size(); ++k) {
        const int u = cand[k];
        if (k == 0) {
          base_seq_.push_back(u);
          search(refine_impl(sg_, individualize(cells, target, u)), depth + 1,
                 true);
        } else {
          if (in_orbit_of_tried(u, tried, depth)) continue;
          search(refine_impl(sg_, individualize(cells, target, u)), depth + 1,
                 false);
        }
        tried.push_back(u);
      }
      return false;
    }
    for (int u : cand) {
      if (search(refine_impl(sg_, individualize(cells, target, u)), depth + 1,
                 false)) {
        return true;
      }
    }
    return false;
  }

  bool handle_leaf(const VertexPartition& cells, bool on_base) {
    std::vector<int> leaf;
    leaf.reserve(cells.size());
    for (const auto& c : cells) leaf.push_back(c.front());
    if (!base_leaf_set_) {
      base_leaf_ = std::move(leaf);
      base_leaf_set_ = true;
      return false;
    }
    Permutation sigma;
    sigma.images.resize(sg_.n);
    for (std::size_t i = 0; i < leaf.size(); ++i) {
      sigma.images[base_leaf_[i]] = leaf[i];
    }
    if (!sigma.is_identity() && is_automorphism_impl(sg_, cg_.graph, sigma)) {
      found_.push_back(std::move(sigma));
      return !on_base;
    }
    return false;
  }

  bool in_orbit_of_tried(int u, const std::vector<int>& tried,
                         std::size_t depth) {
    Dsu dsu(sg_.n);
    for (const Permutation& g : found_) {
      bool fixes_prefix = true;
      for (std::size_t i = 0; i < depth && i < base_seq_.size(); ++i) {
        if (g(base_seq_[i]) != base_seq_[i]) {
          fixes_prefix = false;
          break;
        }
      }
      if (!fixes_prefix) continue;
      for (int v = 0; v < sg_.n; ++v) dsu.unite(v, g(v));
    }
    for (int t : tried) {
      if (dsu.find(t) == dsu.find(u)) return true;
    }
    return false;
  }

  const ColoredGraph& cg_;
  SearchGraph sg_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Permutation> found_;
  std::vector<std::vector<std::size_t>> base_shapes_;
  std::vector<int> base_seq_;
  std::vector<int> base_leaf_;
  bool base_leaf_set_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_automorphism(const ColoredGraph& cg, const Permutation& p) {
  SearchGraph sg(cg);
  return is_automorphism_impl(sg, cg.graph, p);
}

VertexPartition color_partition(const ColoredGraph& cg) {
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < cg.graph.n_vertices; ++v) {
    by_color[cg.vertex_colors[v]].push_back(v);
  }
  VertexPartition cells;
  cells.reserve(by_color.size());
  for (auto& [c, members] : by_color) {
    (void)c;
    cells.push_back(std::move(members));
  }
  return cells;
}

VertexPartition refine(const ColoredGraph& cg, VertexPartition initial) {
  SearchGraph sg(cg);
  for (auto& cell : initial) std::sort(cell.begin(), cell.end());
  return refine_impl(sg, std::move(initial));
}

GeneratorSet automorphism_generators(const ColoredGraph& cg,
                                     const AutomorphismSearchOptions& opts) {
  validate_graph(cg.graph);
  return AutSearch(cg, opts).run();
}

GeneratorSet brute_force_automorphisms(const ColoredGraph& cg) {
  const int n = cg.graph.n_vertices;
  if (n > 10) {
    throw ResourceGuardError("brute-force automorphism listing limited to 10 vertices",
                             {}, n, 10);
  }
  SearchGraph sg(cg);
  GeneratorSet out;
  out.n = n;
  Permutation p = Permutation::identity(n);
  do {
    if (is_automorphism_impl(sg, cg.graph, p)) out.generators.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

WeightedGadget weighted_gadget(const Graph& g) {
  validate_graph(g);
  if (uniform_weights(g)) {
    WeightedGadget wg{uniform_coloring(g), {}};
    wg.back_map.resize(g.n_vertices);
    std::iota(wg.back_map.begin(), wg.back_map.end(), 0);
    return wg;
  }
  const std::vector<int> wc = edge_weight_class_ids(g);
  const int n = g.n_vertices;
  Graph gadget;
  gadget.n_vertices = n + static_cast<int>(g.edges.size());
  std::vector<int> colors(gadget.n_vertices, 0);
  std::vector<int> back_map(gadget.n_vertices, -1);
  std::iota(back_map.begin(), back_map.begin() + n, 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int sub = n + static_cast<int>(e);
    gadget.edges.push_back({g.edges[e].u, sub, 1.0});
    gadget.edges.push_back({g.edges[e].v, sub, 1.0});
    colors[sub] = 1 + wc[e];
  }
  validate_graph(gadget);
  return {{std::move(gadget), std::move(colors)}, std::move(back_map)};
}

GeneratorSet restrict_to_original(const GeneratorSet& gadget_gens,
                                  const std::vector<int>& back_map,
                                  int n_original) {
  GeneratorSet out;
  out.n = n_original;
  for (const Permutation& g : gadget_gens.generators) {
    Permutation r;
    r.images.resize(n_original);
    for (int v = 0; v < g.size(); ++v) {
      const int ov = back_map[v];
      if (ov < 0) continue;
      const int img = back_map[g(v)];
      if (img < 0) {
        throw std::invalid_argument("gadget generator mixes original and subdivision vertices");
      }
      r.images[ov] = img;
    }
    validate_permutation(r);
    if (!r.is_identity()) out.generators.push_back(std::move(r));
  }
  return out;
}

GeneratorSet graph_symmetries(const Graph& g, const SymmetryConfig& cfg) {
  AutomorphismSearchOptions opts{cfg.time_budget_s};
  if (uniform_weights(g)) {
    return automorphism_generators(uniform_coloring(g), opts);
  }
  const WeightedGadget wg = weighted_gadget(g);
  try {
    return restrict_to_original(automorphism_generators(wg.colored, opts),
                                wg.back_map, g.n_vertices);
  } catch (const SolverTimeout& e) {
    throw SolverTimeout(e.what(),
                        restrict_to_original(e.partial_generators(), wg.back_map,
                                             g.n_vertices));
  }
}

OrbitPartition term_orbits(const GeneratorSet& gens, const Hamiltonian& h) {
  if (gens.n != h.n_qubits) {
    throw std::invalid_argument("generator degree != n_qubits");
  }
  std::map<std::vector<int>, int> index_of;
  for (std::size_t t = 0; t < h.terms.size(); ++t) {
    index_of.emplace(h.terms[t].support, static_cast<int>(t));
  }
  Dsu dsu(static_cast<int>(h.terms.size()));
  for (const Permutation& g : gens.generators) {
    for (std::size_t t = 0; t < h.terms.size(); ++t) {
      const std::vector<int> img = g.apply_to_support(h.terms[t].support);
      auto it = index_of.find(img);
      if (it == index_of.end()) {
        throw std::invalid_argument(
            "generator maps a term outside the term set; generators do not "
            "respect the instance");
      }
      dsu.unite(static_cast<int>(t), it->second);
    }
  }
  std::map<int, std::vector<int>> classes;
  for (std::size_t t = 0; t < h.terms.size(); ++t) {
    classes[dsu.find(static_cast<int>(t))].push_back(static_cast<int>(t));
  }
  OrbitPartition out;
  for (auto& [root, members] : classes) {
    (void)root;
    OrbitClass cls;
    cls.coeff = h.terms[members.front()].coeff;
    for (int t : members) {
      if (h.terms[t].coeff != cls.coeff) {
        throw std::invalid_argument(
            "orbit mixes terms with different coefficients; generators do not "
            "respect the weighted instance (use weighted_gadget)");
      }
      cls.members.push_back(h.terms[t].support);
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    cls.multiplicity = static_cast<int>(cls.members.size());
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const OrbitClass& a, const OrbitClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

OrbitPartition trivial_orbits(const Hamiltonian& h) {
  return term_orbits(GeneratorSet{h.n_qubits, {}}, h);
}

std::vector<std::vector<int>> vertex_orbits(const GeneratorSet& gens) {
  Dsu dsu(gens.n);
  for (const Permutation& g : gens.generators) {
    for (int v = 0; v < gens.n; ++v) dsu.unite(v, g(v));
  }
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < gens.n; ++v) classes[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(classes.size());
  for (auto& [root, members] : classes) {
    (void)root;
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_group(const GeneratorSet& gens,
                                         std::size_t cap) {
  std::set<Permutation> seen;
  std::vector<Permutation> queue;
  queue.push_back(Permutation::identity(gens.n));
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Permutation cur = queue[head];
    for (const Permutation& g : gens.generators) {
      Permutation next = g.compose(cur);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw ResourceGuardError("group enumeration exceeded cap", {},
                                   static_cast<int>(cap), static_cast<int>(cap));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return {queue.begin(), queue.end()};
}

}  // namespace symqaoa
