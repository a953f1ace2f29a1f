#pragma once

#include "extremal/labels.hpp"

#include <compare>
#include <optional>
#include <set>
#include <vector>

namespace extremal {

/// A set partition of {1..n}. Blocks are kept sorted by their minimum label.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws extremal::Error unless the blocks are nonempty, disjoint and cover {1..n}.
  SetPartition(int n, std::vector<LabelSet> blocks);

  static SetPartition complete(int n);
  static SetPartition single_block(int n);

  int n() const { return n_; }
  const std::vector<LabelSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool is_complete() const { return static_cast<int>(blocks_.size()) == n_; }

  /// Union of the singleton blocks.
  LabelSet singleton_support() const;

  /// Index of the block holding `label`.
  std::size_t block_of(int label) const;

  bool operator==(const SetPartition&) const = default;
  std::strong_ordering operator<=>(const SetPartition& other) const;

 private:
  int n_ = 0;
  std::vector<LabelSet> blocks_;
};

/// Parts stored in descending order.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts);

  static IntegerPartition complete(int n);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool is_complete() const { return static_cast<int>(parts_.size()) == n_; }

  bool operator==(const IntegerPartition&) const = default;
  auto operator<=>(const IntegerPartition& other) const { return parts_ <=> other.parts_; }

 private:
  int n_ = 0;
  std::vector<int> parts_;
};

// Set partition order. leq(P, Q) holds when Q refines P.
bool leq(const SetPartition& p, const SetPartition& q);
bool preceq(const SetPartition& p, const SetPartition& q);

std::vector<SetPartition> preceq_corruptions(const SetPartition& p);
std::vector<SetPartition> tight_common_upper_bounds(const SetPartition& q1,
                                                    const SetPartition& q2);
bool is_transversal(const SetPartition& p, const SetPartition& q);
bool is_strongly_transversal(const SetPartition& p, const SetPartition& q);
SetPartition finest_common_coarsening(const SetPartition& p, const SetPartition& q);

IntegerPartition shape(const SetPartition& p);

/// True when q refines p.
bool int_leq(const IntegerPartition& p, const IntegerPartition& q);

std::set<IntegerPartition> replacement_closure(const std::vector<IntegerPartition>& family);

struct SpecialCheck {
  bool special = true;
  std::optional<IntegerPartition> witness;
};
SpecialCheck is_special_family(const std::vector<IntegerPartition>& family);

/// Every set partition of {1..n} with a block count in [min_blocks, max_blocks].
std::vector<SetPartition> all_set_partitions(int n, int min_blocks = 1, int max_blocks = 64);

/// Every set partition whose shape is `p`.
std::vector<SetPartition> set_partitions_of_shape(const IntegerPartition& p);

/// Integer partitions of n, descending lexicographic order.
std::vector<IntegerPartition> all_integer_partitions(int n, int min_parts = 1, int max_parts = 64);

/// Image of `p` under the label permutation `perm` (perm[i-1] is the image of label i).
SetPartition relabel(const SetPartition& p, const std::vector<int>& perm);
LabelSet relabel(LabelSet s, const std::vector<int>& perm);

/// Keeps the members that are maximal under leq, sorted.
std::vector<SetPartition> maximal_elements(std::vector<SetPartition> family);
std::vector<IntegerPartition> maximal_elements(std::vector<IntegerPartition> family);

}  // namespace extremal
