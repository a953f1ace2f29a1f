#pragma once

#include "extremal/errors.hpp"
#include "extremal/partitions.hpp"
#include "extremal/trees.hpp"

#include <optional>
#include <vector>

namespace extremal {

/// An extremal assignment in generator form: an antichain of set partitions,
/// each with between 3 and n-1 blocks. A vertex is assigned when its basic
/// partition is a coarsening of some generator.
class Assignment {
 public:
  explicit Assignment(int n) : n_(n) {}
  /// Throws if a generator is out of range or the family is not an antichain.
  Assignment(int n, std::vector<SetPartition> generators);

  int n() const { return n_; }
  const std::vector<SetPartition>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  bool operator==(const Assignment&) const = default;

 private:
  int n_;
  std::vector<SetPartition> generators_;
};

/// Drops duplicates and non-maximal members.
Assignment normalize(int n, std::vector<SetPartition> generators);

Assignment atomic(const SetPartition& p);

bool member(const Assignment& z, const LabeledTree& tree, int v);

std::vector<int> assigned(const Assignment& z, const LabeledTree& tree);

struct ExtremalityWitness {
  SetPartition first;   // corruption of one generator
  SetPartition second;  // corruption of another generator
  SetPartition bound;   // tight common upper bound lying under no generator
};

struct ExtremalityCheck {
  bool extremal = true;
  std::optional<ExtremalityWitness> witness;
};

/// Generator-level test. Throws if `generators` is not a normalized antichain.
ExtremalityCheck is_extremal(int n, const std::vector<SetPartition>& generators);
inline ExtremalityCheck is_extremal(const Assignment& z) { return is_extremal(z.n(), z.generators()); }

/// Smallest extremal assignment assigning every given vertex; empty when none exists.
std::optional<Assignment> smallest_containing(const std::vector<MarkedTree>& pairs);

class NotExtremalError : public Error {
 public:
  explicit NotExtremalError(ExtremalityWitness w);
  const ExtremalityWitness& witness() const { return witness_; }

 private:
  ExtremalityWitness witness_;
};

Assignment assignment_union(const Assignment& a, const Assignment& b);
Assignment assignment_intersection(const Assignment& a, const Assignment& b);

inline constexpr int kDefaultGuard = 7;

/// Differences on every tree are isolated 3-valent vertices. Enumerates S(n).
bool equivalent(const Assignment& a, const Assignment& b, int guard = kDefaultGuard);

}  // namespace extremal
