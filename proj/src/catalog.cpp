#include "extremal/catalog.hpp"

#include <memory>
#include <mutex>

namespace extremal {

namespace {

void check_guard(int n, int guard) {
  if (n > guard) throw GuardError("exhaustive scan over S(" + std::to_string(n) + ") refused", guard);
}

std::uint32_t all_vertices(const LabeledTree& t) { return (std::uint32_t{1} << t.vertex_count()) - 1; }

}  // namespace

TreeCatalog::TreeCatalog(int n) : n_(n), trees_(enumerate_trees(n)) {
  for (std::size_t i = 0; i < trees_.size(); ++i) index_.emplace(trees_[i].clusters(), i);
  steps_.resize(trees_.size());
  for (std::size_t i = 0; i < trees_.size(); ++i)
    for (auto [a, b] : trees_[i].edges()) {
      Contraction c = contract(trees_[i], {a, b});
      steps_[i].push_back({a, b, index_of(c.tree), std::move(c.vertex_map)});
    }
}

const TreeCatalog& TreeCatalog::get(int n, int guard) {
  check_guard(n, guard);
  static std::mutex lock;
  static std::map<int, std::unique_ptr<TreeCatalog>> cache;
  std::lock_guard<std::mutex> hold(lock);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<TreeCatalog>(n);
  return *slot;
}

std::size_t TreeCatalog::index_of(const LabeledTree& tree) const {
  auto it = index_.find(tree.clusters());
  if (it == index_.end()) throw Error("tree not in catalog");
  return it->second;
}

ExplicitAssignment explicit_table(const Assignment& z, int guard) {
  const TreeCatalog& cat = TreeCatalog::get(z.n(), guard);
  ExplicitAssignment e{z.n(), std::vector<std::uint32_t>(cat.trees().size(), 0)};
  for (std::size_t t = 0; t < cat.trees().size(); ++t)
    for (int v : assigned(z, cat.trees()[t])) e.table[t] |= std::uint32_t{1} << v;
  return e;
}

bool brute_is_extremal(const ExplicitAssignment& e, int guard) {
  const TreeCatalog& cat = TreeCatalog::get(e.n, guard);
  for (std::size_t t = 0; t < cat.trees().size(); ++t) {
    if (e.table[t] == all_vertices(cat.trees()[t])) return false;
    for (const auto& step : cat.steps(t)) {
      for (int v = 0; v < cat.trees()[t].vertex_count(); ++v) {
        if (v == step.a || v == step.b) continue;
        if (e.contains(t, v) != e.contains(step.target, step.vertex_map[v])) return false;
      }
      bool both = e.contains(t, step.a) && e.contains(t, step.b);
      if (both != e.contains(step.target, step.vertex_map[step.a])) return false;
    }
  }
  return true;
}

Assignment generators_from_explicit(const ExplicitAssignment& e, int guard) {
  if (!brute_is_extremal(e, guard)) throw Error("explicit assignment is not extremal");
  const TreeCatalog& cat = TreeCatalog::get(e.n, guard);
  std::vector<SetPartition> found;
  for (std::size_t t = 0; t < cat.trees().size(); ++t)
    for (int v = 0; v < cat.trees()[t].vertex_count(); ++v)
      if (e.contains(t, v)) found.push_back(basic_partition(cat.trees()[t], v));
  return normalize(e.n, std::move(found));
}

std::optional<ExplicitAssignment> brute_smallest(const std::vector<MarkedTree>& pairs, int guard) {
  if (pairs.empty()) throw Error("need at least one marked vertex");
  const int n = pairs.front().tree.n();
  const TreeCatalog& cat = TreeCatalog::get(n, guard);
  ExplicitAssignment e{n, std::vector<std::uint32_t>(cat.trees().size(), 0)};
  for (const auto& pr : pairs) {
    if (pr.tree.n() != n) throw Error("marked trees have different label counts");
    e.table[cat.index_of(pr.tree)] |= std::uint32_t{1} << pr.vertex;
  }
  auto set = [&](std::size_t t, int v, bool& changed) {
    std::uint32_t bit = std::uint32_t{1} << v;
    if (!(e.table[t] & bit)) {
      e.table[t] |= bit;
      changed = true;
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < cat.trees().size(); ++t)
      for (const auto& step : cat.steps(t)) {
        for (int v = 0; v < cat.trees()[t].vertex_count(); ++v) {
          if (v == step.a || v == step.b) continue;
          if (e.contains(t, v)) set(step.target, step.vertex_map[v], changed);
          if (e.contains(step.target, step.vertex_map[v])) set(t, v, changed);
        }
        int merged = step.vertex_map[step.a];
        if (e.contains(t, step.a) && e.contains(t, step.b)) set(step.target, merged, changed);
        if (e.contains(step.target, merged)) {
          set(t, step.a, changed);
          set(t, step.b, changed);
        }
      }
  }
  for (std::size_t t = 0; t < cat.trees().size(); ++t)
    if (e.table[t] == all_vertices(cat.trees()[t])) return std::nullopt;
  return e;
}

}  // namespace extremal
