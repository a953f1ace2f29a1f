#pragma once

#include "extremal/assignments.hpp"
#include "extremal/rational.hpp"

#include <optional>
#include <vector>

namespace extremal {

/// Weights a_1..a_n with 0 < a_i <= 1 and total above 2.
using WeightData = std::vector<Rational>;

/// Throws extremal::Error describing the first violated condition.
void validate_weights(const WeightData& a);

/// A vertex is assigned when some edge side containing it has total weight at most 1.
Assignment weight_assignment(const WeightData& a);

/// Assigns exactly the vertices without labels. Needs n >= 5.
Assignment boggi(int n);

struct GitParams {
  int d = 1;
  Rational gamma;
  std::vector<Rational> c;
};

void validate_git(const GitParams& p);

/// A label set with 2..n-2 labels whose tail degree falls on a wall, if any.
std::optional<LabelSet> first_wall(const GitParams& p);

/// Degree of a tail with label set `tail`. Throws when the tail lies on a wall.
int sigma_tail(const GitParams& p, LabelSet tail);

/// Degree of a vertex, computed through the adjacent edge whose far side is lexicographically smallest.
int sigma_vertex(const GitParams& p, const LabeledTree& tree, int v);

/// Degree of a vertex computed through the edge towards `neighbor`.
int sigma_vertex_via(const GitParams& p, const LabeledTree& tree, int v, int neighbor);

/// Vertices of degree zero are assigned. Every tail is checked against the walls first.
Assignment git_assignment(const GitParams& p);

struct Restriction {
  Assignment assignment;
  /// origin[i] holds the original labels behind new label i+1: a single label
  /// carried by the vertex, or the label set of a branch at it.
  std::vector<LabelSet> origin;
};

/// Restriction to an unassigned vertex, found by testing every star on the new label set.
Restriction restriction(const Assignment& z, const LabeledTree& tree, int v, int guard = kDefaultGuard);

}  // namespace extremal
