#include "extremal/trees.hpp"

#include "extremal/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace extremal {

std::optional<std::string> stability_problem(const TreeShape& shape) {
  const int n = shape.n;
  const int count = static_cast<int>(shape.labels.size());
  if (n < 3 || n > kMaxLabels) return "label count must be between 3 and " + std::to_string(kMaxLabels);
  if (count == 0) return std::string("tree has no vertices");
  LabelSet seen = 0;
  for (LabelSet s : shape.labels) {
    if (s & ~full_set(n)) return std::string("label outside 1..") + std::to_string(n);
    if (s & seen) return "label " + std::to_string(min_label(s & seen)) + " attached twice";
    seen |= s;
  }
  if (seen != full_set(n)) return "label " + std::to_string(min_label(full_set(n) & ~seen)) + " not attached";
  std::vector<std::vector<int>> adj(count);
  std::set<std::pair<int, int>> distinct;
  for (auto [a, b] : shape.edges) {
    if (a < 0 || b < 0 || a >= count || b >= count) return std::string("edge refers to a missing vertex");
    if (a == b) return std::string("loop edge");
    if (!distinct.insert({std::min(a, b), std::max(a, b)}).second) return std::string("repeated edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (static_cast<int>(shape.edges.size()) != count - 1) {
    return static_cast<int>(shape.edges.size()) >= count ? std::string("graph has a cycle")
                                                         : std::string("graph is disconnected");
  }
  std::vector<bool> reached(count, false);
  std::vector<int> stack{0};
  reached[0] = true;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : adj[v])
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
  }
  if (visited != count) return std::string("graph is disconnected");
  for (int v = 0; v < count; ++v) {
    int valence = set_size(shape.labels[v]) + static_cast<int>(adj[v].size());
    if (valence < 3)
      return "vertex " + std::to_string(v) + " has valence " + std::to_string(valence);
  }
  return std::nullopt;
}

LabeledTree::LabeledTree(const TreeShape& shape, std::vector<int>* index_map) {
  if (auto problem = stability_problem(shape)) throw Error("unstable tree: " + *problem);
  n_ = shape.n;
  const int count = static_cast<int>(shape.labels.size());
  std::vector<std::vector<int>> adj(count);
  for (auto [a, b] : shape.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int root = 0;
  while (!has_label(shape.labels[root], 1)) ++root;

  std::vector<int> up(count, -1);
  std::vector<LabelSet> below(count, 0);
  std::function<LabelSet(int, int)> gather = [&](int v, int from) {
    up[v] = from;
    LabelSet s = shape.labels[v];
    for (int w : adj[v])
      if (w != from) s |= gather(w, v);
    return below[v] = s;
  };
  gather(root, -1);

  std::vector<int> order;  // canonical id -> input id
  std::function<void(int)> visit = [&](int v) {
    order.push_back(v);
    std::vector<int> kids;
    for (int w : adj[v])
      if (w != up[v]) kids.push_back(w);
    std::sort(kids.begin(), kids.end(),
              [&](int a, int b) { return min_label(below[a]) < min_label(below[b]); });
    for (int w : kids) visit(w);
  };
  visit(root);

  std::vector<int> canon(count);
  for (int i = 0; i < count; ++i) canon[order[i]] = i;
  labels_.resize(count);
  adjacency_.resize(count);
  parent_.resize(count);
  subtree_.resize(count);
  for (int i = 0; i < count; ++i) {
    int v = order[i];
    labels_[i] = shape.labels[v];
    subtree_[i] = below[v];
    parent_[i] = up[v] < 0 ? -1 : canon[up[v]];
    for (int w : adj[v]) adjacency_[i].push_back(canon[w]);
    std::sort(adjacency_[i].begin(), adjacency_[i].end());
  }
  if (index_map) *index_map = canon;
}

int LabeledTree::vertex_of_label(int label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (has_label(labels_[v], label)) return v;
  throw Error("label " + std::to_string(label) + " not in tree");
}

LabelSet LabeledTree::branch(int v, int w) const {
  if (parent_.at(w) == v) return subtree_[w];
  if (parent_.at(v) == w) return full_set(n_) & ~subtree_[v];
  throw Error("vertices " + std::to_string(v) + " and " + std::to_string(w) + " are not adjacent");
}

std::vector<std::pair<int, int>> LabeledTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < vertex_count(); ++v) out.emplace_back(parent_[v], v);
  return out;
}

std::vector<LabelSet> LabeledTree::clusters() const {
  std::vector<LabelSet> out(subtree_.begin() + 1, subtree_.end());
  std::sort(out.begin(), out.end());
  return out;
}

TreeShape LabeledTree::shape() const {
  TreeShape s;
  s.n = n_;
  s.labels = labels_;
  s.edges = edges();
  return s;
}

Contraction contract(const LabeledTree& tree, const std::vector<int>& vertices) {
  if (vertices.empty()) throw Error("cannot contract an empty vertex set");
  const int count = tree.vertex_count();
  std::vector<bool> in(count, false);
  for (int v : vertices) {
    if (v < 0 || v >= count) throw Error("vertex " + std::to_string(v) + " not in tree");
    in[v] = true;
  }
  std::vector<bool> reached(count, false);
  std::vector<int> stack{vertices.front()};
  reached[vertices.front()] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : tree.neighbors(v))
      if (in[w] && !reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
  }
  for (int v : vertices)
    if (!reached[v]) throw Error("contracted vertex set is not connected");

  // Merged vertex becomes group 0; the others keep their relative order.
  std::vector<int> group(count);
  int next = 1;
  for (int v = 0; v < count; ++v) group[v] = in[v] ? 0 : next++;
  TreeShape shape;
  shape.n = tree.n();
  shape.labels.assign(next, 0);
  for (int v = 0; v < count; ++v) shape.labels[group[v]] |= tree.labels_at(v);
  for (auto [a, b] : tree.edges())
    if (group[a] != group[b]) shape.edges.emplace_back(group[a], group[b]);
  std::vector<int> canon;
  LabeledTree result(shape, &canon);
  std::vector<int> map(count);
  for (int v = 0; v < count; ++v) map[v] = canon[group[v]];
  return {std::move(result), canon[0], std::move(map)};
}

LabeledTree tree_from_clusters(int n, const std::vector<LabelSet>& clusters) {
  std::vector<LabelSet> sorted = clusters;
  std::sort(sorted.begin(), sorted.end(),
            [](LabelSet a, LabelSet b) { return set_size(a) > set_size(b) || (set_size(a) == set_size(b) && a < b); });
  TreeShape shape;
  shape.n = n;
  shape.labels.assign(sorted.size() + 1, 0);
  std::vector<LabelSet> covered(sorted.size() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (has_label(sorted[i], 1)) throw Error("clusters must avoid label 1");
    int parent = 0;
    // Largest-first order: the last strict superset seen is the smallest one.
    for (std::size_t j = 0; j < i; ++j)
      if (sorted[j] != sorted[i] && is_subset(sorted[i], sorted[j])) parent = static_cast<int>(j) + 1;
    shape.edges.emplace_back(parent, static_cast<int>(i) + 1);
    covered[parent] |= sorted[i];
  }
  shape.labels[0] = full_set(n) & ~covered[0];
  for (std::size_t i = 0; i < sorted.size(); ++i) shape.labels[i + 1] = sorted[i] & ~covered[i + 1];
  return LabeledTree(shape);
}

std::vector<LabeledTree> enumerate_trees(int n, int k) {
  if (n < 3 || n > kMaxLabels) throw Error("tree enumeration needs 3 <= n <= " + std::to_string(kMaxLabels));
  if (k != 0 && (k < 1 || k > n - 2))
    throw Error("vertex count must be between 1 and " + std::to_string(n - 2));
  std::vector<LabelSet> candidates;
  const LabelSet others = full_set(n) & ~label_bit(1);
  for (LabelSet s = others; s != 0; s = (s - 1) & others)
    if (set_size(s) >= 2 && set_size(s) <= n - 2) candidates.push_back(s);
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::vector<LabelSet>> found;
  std::vector<LabelSet> chosen;
  const std::size_t want = k == 0 ? 0 : static_cast<std::size_t>(k - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (k == 0 || chosen.size() == want) found.push_back(chosen);
    if (k != 0 && chosen.size() == want) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      LabelSet c = candidates[i];
      bool ok = std::all_of(chosen.begin(), chosen.end(), [c](LabelSet d) {
        return (c & d) == 0 || is_subset(c, d) || is_subset(d, c);
      });
      if (!ok) continue;
      chosen.push_back(c);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<LabeledTree> out;
  out.reserve(found.size());
  for (const auto& c : found) out.push_back(tree_from_clusters(n, c));
  return out;
}

SetPartition basic_partition(const LabeledTree& tree, int v) {
  if (v < 0 || v >= tree.vertex_count()) throw Error("vertex " + std::to_string(v) + " not in tree");
  std::vector<LabelSet> blocks;
  for (int w : tree.neighbors(v)) blocks.push_back(tree.branch(v, w));
  for (int l : labels_of(tree.labels_at(v))) blocks.push_back(label_bit(l));
  return SetPartition(tree.n(), std::move(blocks));
}

BasicPair star_tree(const SetPartition& p) {
  const int k = static_cast<int>(p.size());
  if (k < 3 || k > p.n() - 1)
    throw Error("a basic pair needs between 3 and n-1 blocks, got " + std::to_string(k));
  TreeShape shape;
  shape.n = p.n();
  shape.labels.push_back(p.singleton_support());
  for (LabelSet b : p.blocks()) {
    if (set_size(b) < 2) continue;
    shape.labels.push_back(b);
    shape.edges.emplace_back(0, static_cast<int>(shape.labels.size()) - 1);
  }
  std::vector<int> canon;
  LabeledTree tree(shape, &canon);
  return {std::move(tree), canon[0]};
}

std::vector<std::pair<LabelSet, LabelSet>> edge_tails(const LabeledTree& tree) {
  std::vector<std::pair<LabelSet, LabelSet>> out;
  const LabelSet all = full_set(tree.n());
  for (auto [p, c] : tree.edges()) {
    LabelSet far = tree.subtree_labels(c);
    out.emplace_back(all & ~far, far);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledTree relabel(const LabeledTree& tree, const std::vector<int>& perm) {
  TreeShape s = tree.shape();
  for (auto& l : s.labels) l = relabel(l, perm);
  return LabeledTree(s);
}

}  // namespace extremal
