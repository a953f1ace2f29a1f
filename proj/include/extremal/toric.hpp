#pragma once

#include "extremal/labels.hpp"

#include <utility>
#include <vector>

namespace extremal {

/// Simple graph on vertices 1..m. Vertex subsets reuse the LabelSet encoding.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws on loops, repeated edges or endpoints outside 1..m.
  SimpleGraph(int m, std::vector<std::pair<int, int>> edges);

  int order() const { return m_; }
  /// Edges with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const { return has_label(adjacency_[u - 1], v); }
  LabelSet neighborhood(int v) const { return adjacency_[v - 1]; }

  bool operator==(const SimpleGraph& other) const { return m_ == other.m_ && edges_ == other.edges_; }

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<LabelSet> adjacency_;
};

bool induces_connected(const SimpleGraph& g, LabelSet vertices);
bool is_connected(const SimpleGraph& g);

/// Every vertex subset inducing a connected subgraph, increasing mask order.
std::vector<LabelSet> tubes(const SimpleGraph& g);

/// Throws on disconnected input.
bool is_cotransitive(const SimpleGraph& g);
bool is_complete_multipartite(const SimpleGraph& g);

/// Contracted label sets for the toric model of a connected graph on n-2 vertices, where n = order + 2.
///
/// Graph vertex i is label i and the extra labels are n-1 and n. The family holds
/// every subset of 1..n-2 with at least two labels, every B + {n-1} with B a
/// non-tube of size at least two, and every pair {i, n-1}.
std::vector<LabelSet> indicator_from_graph(const SimpleGraph& g);

bool is_modular_toric(const SimpleGraph& g);

/// Connected simple graphs on m labeled vertices.
std::vector<SimpleGraph> all_connected_graphs(int m);

}  // namespace extremal
