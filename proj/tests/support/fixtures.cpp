#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace symqaoa::testing {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return make_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  if (n >= 3) edges.push_back({0, n - 1, 1.0});
  return make_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  }
  return make_graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return make_graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v, 1.0});
  }
  return make_graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1.0});          // outer cycle
    edges.push_back({i, i + 5, 1.0});                // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5, 1.0});  // inner pentagram
  }
  return make_graph(10, std::move(edges));
}

Graph torus_grid(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) {
    if (d < 2) throw std::invalid_argument("torus dimensions must be >= 2");
    n *= d;
  }
  auto encode = [&](const std::vector<int>& t) {
    int idx = 0;
    for (int d = static_cast<int>(dims.size()) - 1; d >= 0; --d) {
      idx = idx * dims[d] + t[d];
    }
    return idx;
  };
  std::set<std::pair<int, int>> pairs;
  std::vector<int> t(dims.size(), 0);
  for (int v = 0; v < n; ++v) {
    for (std::size_t d = 0; d < dims.size(); ++d) {
      std::vector<int> nb = t;
      nb[d] = (nb[d] + 1) % dims[d];
      const int u = encode(nb);
      pairs.insert({std::min(v, u), std::max(v, u)});
    }
    for (std::size_t d = 0; d < dims.size(); ++d) {
      if (++t[d] < dims[d]) break;
      t[d] = 0;
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v, 1.0});
  return make_graph(n, std::move(edges));
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
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

/// Minimum edge bitmask over all vertex relabelings; usable as an
/// isomorphism key for n <= 7.
std::uint32_t canonical_mask(int n, std::uint32_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pair_index[pairs[k].first][pairs[k].second] = static_cast<int>(k);
    pair_index[pairs[k].second][pairs[k].first] = static_cast<int>(k);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t remapped = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (std::uint32_t{1} << k)) {
        remapped |= std::uint32_t{1}
                    << pair_index[perm[pairs[k].first]][perm[pairs[k].second]];
      }
    }
    best = std::min(best, remapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask & (std::uint32_t{1} << k)) {
      edges.push_back({pairs[k].first, pairs[k].second, 1.0});
    }
  }
  return make_graph(n, std::move(edges));
}

bool mask_connected(int n, std::uint32_t mask) {
  const auto pairs = all_pairs(n);
  Dsu dsu(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask & (std::uint32_t{1} << k)) dsu.unite(pairs[k].first, pairs[k].second);
  }
  for (int v = 1; v < n; ++v) {
    if (dsu.find(v) != dsu.find(0)) return false;
  }
  return true;
}

}  // namespace

Graph random_gnm(int n, int m, std::uint64_t seed) {
  auto pairs = all_pairs(n);
  if (m > static_cast<int>(pairs.size())) {
    throw std::invalid_argument("too many edges requested");
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<Edge> edges;
  for (int k = 0; k < m; ++k) edges.push_back({pairs[k].first, pairs[k].second, 1.0});
  return make_graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  if (g.n_vertices <= 1) return true;
  Dsu dsu(g.n_vertices);
  for (const Edge& e : g.edges) dsu.unite(e.u, e.v);
  for (int v = 1; v < g.n_vertices; ++v) {
    if (dsu.find(v) != dsu.find(0)) return false;
  }
  return true;
}

Graph random_connected(int n, int m, std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
    Graph g = random_gnm(n, m, seed + 7919 * attempt);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("failed to sample a connected graph");
}

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n * d % 2 != 0) throw std::invalid_argument("n*d must be even");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(n * d);
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> pairs;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
      const int u = std::min(stubs[k], stubs[k + 1]);
      const int v = std::max(stubs[k], stubs[k + 1]);
      if (u == v || !pairs.insert({u, v}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({u, v, 1.0});
    Graph g = make_graph(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("failed to sample a regular graph");
}

std::vector<Graph> all_connected_graphs_upto(int max_n) {
  if (max_n > 6) throw std::invalid_argument("exhaustive listing limited to 6 vertices");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const int n_pairs = n * (n - 1) / 2;
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n_pairs); ++mask) {
      if (!mask_connected(n, mask)) continue;
      if (seen.insert(canonical_mask(n, mask)).second) {
        out.push_back(graph_from_mask(n, mask));
      }
    }
  }
  return out;
}

std::vector<Graph> connected_seven_vertex_sample(int count,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> edge_count(7, 15);
  std::unordered_set<std::uint32_t> seen;
  std::vector<Graph> out;
  std::uint64_t sub = 0;
  while (static_cast<int>(out.size()) < count && sub < 100000) {
    const Graph g = random_connected(7, edge_count(rng), seed ^ (0x9e37 + ++sub));
    std::uint32_t mask = 0;
    const auto pairs = all_pairs(7);
    for (const Edge& e : g.edges) {
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k] == std::make_pair(e.u, e.v)) mask |= std::uint32_t{1} << k;
      }
    }
    if (seen.insert(canonical_mask(7, mask)).second) out.push_back(g);
  }
  return out;
}

Graph with_random_weights(const Graph& g, const std::vector<double>& palette,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, palette.size() - 1);
  Graph out = g;
  for (Edge& e : out.edges) e.w = palette[pick(rng)];
  return out;
}

}  // namespace symqaoa::testing
