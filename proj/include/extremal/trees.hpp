#pragma once

#include "extremal/labels.hpp"
#include "extremal/partitions.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

/// Unvalidated tree data: per-vertex labels plus internal edges.
struct TreeShape {
  int n = 0;
  std::vector<LabelSet> labels;
  std::vector<std::pair<int, int>> edges;
};

/// Empty when the shape is a stable tree, otherwise the first reason it is not.
std::optional<std::string> stability_problem(const TreeShape& shape);

inline bool is_stable(const TreeShape& shape) { return !stability_problem(shape); }

/// A stable n-labeled tree in canonical form.
///
/// The root is the vertex carrying label 1. Vertices are numbered in pre-order
/// with children visited by increasing minimum subtree label, so two trees are
/// equal exactly when they are the same labeled tree.
class LabeledTree {
 public:
  LabeledTree() = default;
  /// Throws extremal::Error when the shape is not stable. If `index_map` is
  /// given it receives, for each input vertex, its canonical id.
  explicit LabeledTree(const TreeShape& shape, std::vector<int>* index_map = nullptr);

  int n() const { return n_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  LabelSet labels_at(int v) const { return labels_.at(v); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int valence(int v) const { return set_size(labels_.at(v)) + static_cast<int>(adjacency_.at(v).size()); }
  int parent(int v) const { return parent_.at(v); }
  /// Labels in the subtree below v (everything for the root).
  LabelSet subtree_labels(int v) const { return subtree_.at(v); }
  int vertex_of_label(int label) const;

  /// Labels on the far side of the edge v--w, seen from v.
  LabelSet branch(int v, int w) const;

  /// Internal edges as (parent, child).
  std::vector<std::pair<int, int>> edges() const;

  /// Subtree label sets of the non-root vertices, sorted. Identifies the tree.
  std::vector<LabelSet> clusters() const;

  TreeShape shape() const;

  bool operator==(const LabeledTree& other) const {
    return n_ == other.n_ && labels_ == other.labels_ && adjacency_ == other.adjacency_;
  }

 private:
  int n_ = 0;
  std::vector<LabelSet> labels_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> parent_;
  std::vector<LabelSet> subtree_;
};

struct BasicPair {
  LabeledTree tree;
  int center = 0;
};

/// A tree with one distinguished vertex.
struct MarkedTree {
  LabeledTree tree;
  int vertex = 0;
};

struct Contraction {
  LabeledTree tree;
  int merged = 0;                // id of the vertex the set collapsed to
  std::vector<int> vertex_map;   // old vertex id -> new vertex id
};

/// Collapses a connected set of vertices into one. Throws if `vertices` is empty or disconnected.
Contraction contract(const LabeledTree& tree, const std::vector<int>& vertices);

/// All stable n-labeled trees (with exactly k vertices if k > 0), sorted by
/// vertex count and then by cluster list.
std::vector<LabeledTree> enumerate_trees(int n, int k = 0);

/// Builds the tree whose non-root subtrees are the given clusters (label sets avoiding label 1).
LabeledTree tree_from_clusters(int n, const std::vector<LabelSet>& clusters);

SetPartition basic_partition(const LabeledTree& tree, int v);

/// Requires 3 <= |P| <= n-1.
BasicPair star_tree(const SetPartition& p);

/// One (side containing label 1, other side) pair per internal edge.
std::vector<std::pair<LabelSet, LabelSet>> edge_tails(const LabeledTree& tree);

LabeledTree relabel(const LabeledTree& tree, const std::vector<int>& perm);

}  // namespace extremal
