#include "extremal/assignments.hpp"

#include "extremal/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace extremal {

Assignment::Assignment(int n, std::vector<SetPartition> generators) : n_(n), generators_(std::move(generators)) {
  for (const auto& p : generators_) {
    if (p.n() != n_) throw Error("generator on " + std::to_string(p.n()) + " labels in an order-" + std::to_string(n_) + " assignment");
    if (p.size() < 3 || static_cast<int>(p.size()) > n_ - 1)
      throw Error("generators need between 3 and n-1 blocks");
  }
  std::sort(generators_.begin(), generators_.end());
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < generators_.size(); ++j)
      if (i != j && leq(generators_[i], generators_[j]))
        throw Error("generators are not an antichain; normalize first");
}

Assignment normalize(int n, std::vector<SetPartition> generators) {
  return Assignment(n, maximal_elements(std::move(generators)));
}

Assignment atomic(const SetPartition& p) { return Assignment(p.n(), {p}); }

bool member(const Assignment& z, const LabeledTree& tree, int v) {
  if (z.n() != tree.n()) throw Error("assignment and tree have different label counts");
  SetPartition bp = basic_partition(tree, v);
  return std::any_of(z.generators().begin(), z.generators().end(),
                     [&](const SetPartition& p) { return leq(bp, p); });
}

std::vector<int> assigned(const Assignment& z, const LabeledTree& tree) {
  std::vector<int> out;
  for (int v = 0; v < tree.vertex_count(); ++v)
    if (member(z, tree, v)) out.push_back(v);
  return out;
}

namespace {

bool dominated(const SetPartition& r, const std::vector<SetPartition>& family) {
  return std::any_of(family.begin(), family.end(), [&](const SetPartition& p) { return leq(r, p); });
}

}  // namespace

ExtremalityCheck is_extremal(int n, const std::vector<SetPartition>& generators) {
  Assignment checked(n, generators);
  const auto& gens = checked.generators();
  std::vector<std::vector<SetPartition>> corruptions;
  for (const auto& p : gens) corruptions.push_back(preceq_corruptions(p));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (const auto& qi : corruptions[i])
        for (const auto& qj : corruptions[j])
          for (auto& r : tight_common_upper_bounds(qi, qj))
            if (!dominated(r, gens)) return {false, ExtremalityWitness{qi, qj, std::move(r)}};
  return {};
}

std::optional<Assignment> smallest_containing(const std::vector<MarkedTree>& pairs) {
  if (pairs.empty()) throw Error("need at least one marked vertex");
  const int n = pairs.front().tree.n();
  std::vector<SetPartition> family;
  for (const auto& pr : pairs) {
    if (pr.tree.n() != n) throw Error("marked trees have different label counts");
    family.push_back(basic_partition(pr.tree, pr.vertex));
  }
  family = maximal_elements(std::move(family));

  std::map<SetPartition, std::vector<SetPartition>> corruption_cache;
  auto corruptions = [&](const SetPartition& p) -> const std::vector<SetPartition>& {
    auto it = corruption_cache.find(p);
    if (it == corruption_cache.end()) it = corruption_cache.emplace(p, preceq_corruptions(p)).first;
    return it->second;
  };
  std::set<std::pair<SetPartition, SetPartition>> done;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<SetPartition> snapshot = family;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (!done.insert({snapshot[i], snapshot[j]}).second) continue;
        for (const auto& qi : corruptions(snapshot[i]))
          for (const auto& qj : corruptions(snapshot[j]))
            for (auto& r : tight_common_upper_bounds(qi, qj)) {
              if (r.is_complete()) return std::nullopt;
              if (!dominated(r, family)) {
                family.push_back(std::move(r));
                changed = true;
              }
            }
      }
    family = maximal_elements(std::move(family));
  }
  return Assignment(n, std::move(family));
}

NotExtremalError::NotExtremalError(ExtremalityWitness w)
    : Error("union is not extremal"), witness_(std::move(w)) {}

Assignment assignment_union(const Assignment& a, const Assignment& b) {
  if (a.n() != b.n()) throw Error("assignments have different label counts");
  std::vector<SetPartition> merged = a.generators();
  merged.insert(merged.end(), b.generators().begin(), b.generators().end());
  Assignment z = normalize(a.n(), std::move(merged));
  ExtremalityCheck check = is_extremal(z);
  if (!check.extremal) throw NotExtremalError(*check.witness);
  return z;
}

Assignment assignment_intersection(const Assignment& a, const Assignment& b) {
  if (a.n() != b.n()) throw Error("assignments have different label counts");
  std::vector<SetPartition> meets;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) {
      SetPartition r = finest_common_coarsening(p, q);
      if (r.size() >= 3) meets.push_back(std::move(r));
    }
  return normalize(a.n(), std::move(meets));
}

bool equivalent(const Assignment& a, const Assignment& b, int guard) {
  if (a.n() != b.n()) throw Error("assignments have different label counts");
  const TreeCatalog& trees = TreeCatalog::get(a.n(), guard);
  for (const auto& tree : trees.trees()) {
    std::vector<bool> in_a(tree.vertex_count()), in_b(tree.vertex_count());
    for (int v = 0; v < tree.vertex_count(); ++v) {
      in_a[v] = member(a, tree, v);
      in_b[v] = member(b, tree, v);
    }
    for (int side = 0; side < 2; ++side) {
      auto in_diff = [&](int v) { return side == 0 ? in_a[v] && !in_b[v] : in_b[v] && !in_a[v]; };
      for (int v = 0; v < tree.vertex_count(); ++v) {
        if (!in_diff(v)) continue;
        if (tree.valence(v) != 3) return false;
        for (int w : tree.neighbors(v))
          if (in_diff(w)) return false;
      }
    }
  }
  return true;
}

}  // namespace extremal
