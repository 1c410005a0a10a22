#include "symqaoa/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "symqaoa/errors.hpp"

namespace symqaoa {

namespace {

std::string fmt_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

double parse_weight(const std::string& tok, int line_no) {
  double w = 0.0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, w);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": non-numeric weight '" + tok + "'");
  }
  if (!std::isfinite(w)) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": weight must be finite, got '" + tok + "'");
  }
  return w;
}

}  // namespace

void validate_graph(const Graph& g) {
  if (g.n_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (!g.labels.empty() &&
      static_cast<int>(g.labels.size()) != g.n_vertices) {
    throw std::invalid_argument("label list length != n_vertices");
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.n_vertices || e.v >= g.n_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.u > e.v) throw std::invalid_argument("edge not normalized (u < v)");
    if (!std::isfinite(e.w)) throw std::invalid_argument("non-finite weight");
    if (!seen.insert({e.u, e.v}).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + ")");
    }
  }
}

Graph make_graph(int n_vertices, std::vector<Edge> edges,
                 std::vector<std::string> labels) {
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  Graph g{n_vertices, std::move(edges), std::move(labels)};
  validate_graph(g);
  return g;
}

Graph parse_edge_list(std::string_view text) {
  Graph g;
  std::unordered_map<std::string, int> index_of;
  std::set<std::pair<int, int>> seen;
  bool labels_differ = false;

  auto vertex = [&](const std::string& tok) {
    auto it = index_of.find(tok);
    if (it != index_of.end()) return it->second;
    int idx = static_cast<int>(g.labels.size());
    index_of.emplace(tok, idx);
    g.labels.push_back(tok);
    if (tok != std::to_string(idx)) labels_differ = true;
    return idx;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 2 && toks.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v' or 'u v w', got " +
                       std::to_string(toks.size()) + " tokens");
    }
    int u = vertex(toks[0]);
    int v = vertex(toks[1]);
    if (u == v) {
      throw ParseError("line " + std::to_string(line_no) + ": self-loop on '" +
                       toks[0] + "'");
    }
    double w = toks.size() == 3 ? parse_weight(toks[2], line_no) : 1.0;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                       toks[0] + " " + toks[1]);
    }
    g.edges.push_back({u, v, w});
  }
  g.n_vertices = static_cast<int>(g.labels.size());
  if (!labels_differ) g.labels.clear();
  validate_graph(g);
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges) {
    out += g.label_of(e.u);
    out += ' ';
    out += g.label_of(e.v);
    if (e.w != 1.0) {
      out += ' ';
      out += fmt_weight(e.w);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::pair<double, std::vector<int>>> edge_weight_classes(
    const Graph& g) {
  std::map<double, std::vector<int>> by_weight;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    by_weight[g.edges[i].w].push_back(static_cast<int>(i));
  }
  std::vector<std::pair<double, std::vector<int>>> classes;
  classes.reserve(by_weight.size());
  for (auto& [w, ids] : by_weight) classes.emplace_back(w, std::move(ids));
  return classes;
}

std::vector<int> edge_weight_class_ids(const Graph& g) {
  std::vector<int> ids(g.edges.size(), 0);
  int cls = 0;
  for (const auto& [w, members] : edge_weight_classes(g)) {
    (void)w;
    for (int e : members) ids[e] = cls;
    ++cls;
  }
  return ids;
}

bool uniform_weights(const Graph& g) {
  for (const Edge& e : g.edges) {
    if (e.w != g.edges.front().w) return false;
  }
  return true;
}

Graph reindex_by_first_appearance(const Graph& g) {
  std::vector<int> remap(g.n_vertices, -1);
  int next = 0;
  for (const Edge& e : g.edges) {
    if (remap[e.u] < 0) remap[e.u] = next++;
    if (remap[e.v] < 0) remap[e.v] = next++;
  }
  if (next != g.n_vertices) {
    throw std::invalid_argument(
        "graph has isolated vertices, not expressible as an edge list");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) edges.push_back({remap[e.u], remap[e.v], e.w});
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) labels[remap[v]] = g.labels[v];
  }
  return make_graph(g.n_vertices, std::move(edges), std::move(labels));
}

}  // namespace symqaoa
