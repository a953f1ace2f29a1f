#pragma once

// Exhaustive counterparts of the generator-level operations. Everything here
// walks all of S(n) and is meant for small n and for cross-checking.

#include "extremal/assignments.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace extremal {

class TreeCatalog {
 public:
  struct EdgeStep {
    int a = 0, b = 0;           // endpoints of the contracted edge
    std::size_t target = 0;     // index of the contracted tree
    std::vector<int> vertex_map;
  };

  explicit TreeCatalog(int n);

  /// Shared catalog for n; throws GuardError when n > guard.
  static const TreeCatalog& get(int n, int guard = kDefaultGuard);

  int n() const { return n_; }
  const std::vector<LabeledTree>& trees() const { return trees_; }
  std::size_t index_of(const LabeledTree& tree) const;
  const std::vector<EdgeStep>& steps(std::size_t tree) const { return steps_[tree]; }

 private:
  int n_;
  std::vector<LabeledTree> trees_;
  std::map<std::vector<LabelSet>, std::size_t> index_;
  std::vector<std::vector<EdgeStep>> steps_;
};

/// Assigned vertices of every tree of S(n), as bit masks indexed like the catalog.
struct ExplicitAssignment {
  int n = 0;
  std::vector<std::uint32_t> table;

  bool contains(std::size_t tree, int v) const { return (table[tree] >> v) & 1u; }
  bool operator==(const ExplicitAssignment&) const = default;
};

ExplicitAssignment explicit_table(const Assignment& z, int guard = kDefaultGuard);

/// Throws if the table violates either axiom.
Assignment generators_from_explicit(const ExplicitAssignment& e, int guard = kDefaultGuard);

bool brute_is_extremal(const ExplicitAssignment& e, int guard = kDefaultGuard);

/// Closes the marked vertices under the contraction axiom; empty if the result assigns a whole tree.
std::optional<ExplicitAssignment> brute_smallest(const std::vector<MarkedTree>& pairs, int guard = kDefaultGuard);

}  // namespace extremal
