#include "extremal/invariant.hpp"

#include <algorithm>

namespace extremal {

InvariantAssignment::InvariantAssignment(int n, std::vector<IntegerPartition> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& p : generators_) {
    if (p.n() != n_) throw Error("shape of " + std::to_string(p.n()) + " in an order-" + std::to_string(n_) + " assignment");
    if (p.size() < 3 || static_cast<int>(p.size()) > n_ - 1) throw Error("generating shapes need between 3 and n-1 parts");
  }
  std::sort(generators_.begin(), generators_.end());
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < generators_.size(); ++j)
      if (i != j && int_leq(generators_[i], generators_[j]))
        throw Error("generating shapes are not an antichain; normalize first");
}

InvariantAssignment normalize_invariant(int n, std::vector<IntegerPartition> generators) {
  return InvariantAssignment(n, maximal_elements(std::move(generators)));
}

SpecialCheck inv_is_extremal(const InvariantAssignment& f) { return is_special_family(f.generators()); }

bool inv_member(const InvariantAssignment& f, const LabeledTree& tree, int v) {
  if (f.n() != tree.n()) throw Error("assignment and tree have different label counts");
  IntegerPartition s = shape(basic_partition(tree, v));
  return std::any_of(f.generators().begin(), f.generators().end(),
                     [&](const IntegerPartition& p) { return int_leq(s, p); });
}

std::optional<InvariantAssignment> inv_smallest(int n, const std::vector<IntegerPartition>& seeds) {
  if (seeds.empty()) throw Error("need at least one seed shape");
  std::vector<IntegerPartition> family = maximal_elements(seeds);
  const IntegerPartition complete = IntegerPartition::complete(n);
  for (;;) {
    if (std::find(family.begin(), family.end(), complete) != family.end()) return std::nullopt;
    std::set<IntegerPartition> closed = replacement_closure(family);
    if (closed.count(complete)) return std::nullopt;
    std::vector<IntegerPartition> next(closed.begin(), closed.end());
    next.insert(next.end(), family.begin(), family.end());
    next = maximal_elements(std::move(next));
    if (next == family) break;
    family = std::move(next);
  }
  return InvariantAssignment(n, std::move(family));
}

std::optional<InvariantAssignment> inv_smallest(const std::vector<MarkedTree>& pairs) {
  if (pairs.empty()) throw Error("need at least one marked vertex");
  std::vector<IntegerPartition> seeds;
  for (const auto& pr : pairs) seeds.push_back(shape(basic_partition(pr.tree, pr.vertex)));
  return inv_smallest(pairs.front().tree.n(), seeds);
}

std::optional<InvariantAssignment> symmetrize(const Assignment& z) {
  if (z.empty()) return InvariantAssignment(z.n());
  std::vector<IntegerPartition> seeds;
  for (const auto& p : z.generators()) seeds.push_back(shape(p));
  return inv_smallest(z.n(), seeds);
}

Assignment expand(const InvariantAssignment& f) {
  std::vector<SetPartition> gens;
  for (const auto& p : f.generators())
    for (auto& q : set_partitions_of_shape(p)) gens.push_back(std::move(q));
  return normalize(f.n(), std::move(gens));
}

WeightData inv_smooth_weight(const InvariantAssignment& f) {
  if (f.generators().size() != 1) throw Error("expected exactly one generating shape [n-m,1,...,1]");
  const auto& parts = f.generators().front().parts();
  int big = static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int x) { return x >= 2; }));
  if (big != 1) throw Error("the generating shape must have exactly one part larger than 1");
  const int m = static_cast<int>(parts.size()) - 1;
  if (2 * m >= f.n()) throw Error("uniform weights need twice the singleton count to stay below n");
  return WeightData(f.n(), Rational(1, m));
}

}  // namespace extremal
