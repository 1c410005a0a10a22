#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symqaoa {

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;

  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph over dense vertex indices 0..n_vertices-1.
/// No self-loops, no duplicate edges, finite weights. `labels` is empty
/// when external names coincide with the indices; otherwise labels[i]
/// is the external name of vertex i.
struct Graph {
  int n_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;

  bool has_labels() const { return !labels.empty(); }
  std::string label_of(int v) const {
    return has_labels() ? labels[v] : std::to_string(v);
  }

  bool operator==(const Graph&) const = default;
};

/// Normalizes edge endpoints (u < v) and validates all Graph invariants.
/// Throws std::invalid_argument on violation.
Graph make_graph(int n_vertices, std::vector<Edge> edges,
                 std::vector<std::string> labels = {});

void validate_graph(const Graph& g);

/// Parses "u v" / "u v w" lines. Tokens are arbitrary labels mapped to
/// dense indices in first-appearance order; '#' starts a comment; blank
/// lines are skipped; LF and CRLF both accepted. Throws ParseError.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list for graphs expressible as an edge list
/// (every vertex incident to at least one edge).
std::string serialize_edge_list(const Graph& g);

/// Partition of edge indices by exact weight equality, classes ordered by
/// ascending weight. Every edge appears in exactly one class.
std::vector<std::pair<double, std::vector<int>>> edge_weight_classes(
    const Graph& g);

/// Dense class id per edge, ids following the edge_weight_classes order.
std::vector<int> edge_weight_class_ids(const Graph& g);

bool uniform_weights(const Graph& g);

/// Relabels vertices so indices follow first appearance in the edge list.
/// Requires every vertex to be incident to an edge.
Graph reindex_by_first_appearance(const Graph& g);

}  // namespace symqaoa
