#pragma once

#include "extremal/assignments.hpp"
#include "extremal/families.hpp"

#include <optional>
#include <vector>

namespace extremal {

/// A symmetric extremal assignment, stored by the shapes of its generators.
class InvariantAssignment {
 public:
  explicit InvariantAssignment(int n) : n_(n) {}
  /// Throws unless every generator sums to n with 3..n-1 parts and the family is an antichain.
  InvariantAssignment(int n, std::vector<IntegerPartition> generators);

  int n() const { return n_; }
  const std::vector<IntegerPartition>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  bool operator==(const InvariantAssignment&) const = default;

 private:
  int n_;
  std::vector<IntegerPartition> generators_;
};

InvariantAssignment normalize_invariant(int n, std::vector<IntegerPartition> generators);

SpecialCheck inv_is_extremal(const InvariantAssignment& f);

bool inv_member(const InvariantAssignment& f, const LabeledTree& tree, int v);

/// Closes the seed shapes under replacements. Empty when the complete partition is forced.
std::optional<InvariantAssignment> inv_smallest(int n, const std::vector<IntegerPartition>& seeds);
std::optional<InvariantAssignment> inv_smallest(const std::vector<MarkedTree>& pairs);

std::optional<InvariantAssignment> symmetrize(const Assignment& z);

/// All set partitions of each generating shape.
Assignment expand(const InvariantAssignment& f);

/// Uniform weights 1/m, for a single generator [n-m, 1^m] with 2m < n.
WeightData inv_smooth_weight(const InvariantAssignment& f);

}  // namespace extremal
