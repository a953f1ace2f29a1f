#include "extremal/toric.hpp"

#include "extremal/errors.hpp"
#include "extremal/smooth.hpp"

#include <algorithm>

namespace extremal {

SimpleGraph::SimpleGraph(int m, std::vector<std::pair<int, int>> edges) : m_(m), adjacency_(m, 0) {
  if (m < 1 || m > kMaxLabels) throw Error("graph order must lie in 1.." + std::to_string(kMaxLabels));
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > m || v > m) throw Error("edge endpoint outside 1.." + std::to_string(m));
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_label(adjacency_[u - 1], v)) throw Error("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    adjacency_[u - 1] |= label_bit(v);
    adjacency_[v - 1] |= label_bit(u);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool induces_connected(const SimpleGraph& g, LabelSet vertices) {
  if (vertices == 0) return false;
  LabelSet reached = label_bit(min_label(vertices));
  for (;;) {
    LabelSet grow = reached;
    for (int v : labels_of(reached)) grow |= g.neighborhood(v) & vertices;
    if (grow == reached) break;
    reached = grow;
  }
  return reached == vertices;
}

bool is_connected(const SimpleGraph& g) { return induces_connected(g, full_set(g.order())); }

std::vector<LabelSet> tubes(const SimpleGraph& g) {
  std::vector<LabelSet> out;
  for (LabelSet s = 1; s <= full_set(g.order()); ++s)
    if (induces_connected(g, s)) out.push_back(s);
  return out;
}

bool is_cotransitive(const SimpleGraph& g) {
  if (!is_connected(g)) throw Error("co-transitivity is defined for connected graphs only");
  for (auto [a, b] : g.edges())
    for (int v = 1; v <= g.order(); ++v) {
      if (v == a || v == b) continue;
      if (!g.adjacent(v, a) && !g.adjacent(v, b)) return false;
    }
  return true;
}

bool is_complete_multipartite(const SimpleGraph& g) {
  const int m = g.order();
  for (int u = 1; u <= m; ++u)
    for (int v = 1; v <= m; ++v)
      for (int w = 1; w <= m; ++w) {
        if (u == v || v == w || u == w) continue;
        if (!g.adjacent(u, v) && !g.adjacent(v, w) && g.adjacent(u, w)) return false;
      }
  return true;
}

std::vector<LabelSet> indicator_from_graph(const SimpleGraph& g) {
  const int n = g.order() + 2;
  if (n < 5) throw Error("the toric construction needs a graph on at least 3 vertices");
  if (!is_connected(g)) throw Error("the toric construction needs a connected graph");
  const LabelSet base = full_set(n - 2);
  const LabelSet extra = label_bit(n - 1);
  std::vector<LabelSet> out;
  for (LabelSet b = 1; b <= base; ++b) {
    if (set_size(b) < 2) continue;
    out.push_back(b);
    if (!induces_connected(g, b)) out.push_back(b | extra);
  }
  for (int i = 1; i <= n - 2; ++i) out.push_back(label_bit(i) | extra);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_modular_toric(const SimpleGraph& g) {
  return is_valid_indicator(g.order() + 2, indicator_from_graph(g)).valid;
}

std::vector<SimpleGraph> all_connected_graphs(int m) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) slots.emplace_back(u, v);
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) edges.push_back(slots[i]);
    SimpleGraph g(m, std::move(edges));
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace extremal
