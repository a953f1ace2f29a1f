#pragma once

#include "extremal/assignments.hpp"
#include "extremal/families.hpp"
#include "extremal/ratlp.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace extremal {

/// A downward-closed family of label sets, kept as its maximal members.
struct ContractionIndicator {
  int n = 0;
  std::vector<LabelSet> maximal;

  /// Reduces `sets` to its maximal members, sorted.
  static ContractionIndicator from_sets(int n, std::vector<LabelSet> sets);

  /// True when `s` has at least two labels and lies inside a maximal member.
  bool contains(LabelSet s) const;
  /// Every member, in increasing mask order.
  std::vector<LabelSet> closure() const;

  bool operator==(const ContractionIndicator&) const = default;
};

/// Complements of the maximal members of an indicator.
struct SimpleIntersectingFamily {
  int n = 0;
  std::vector<LabelSet> edges;

  bool operator==(const SimpleIntersectingFamily&) const = default;
};

struct IndicatorCheck {
  bool valid = true;
  std::optional<std::string> violation;
};

/// Checks an explicitly listed family: sizes, downward closure, and the covering clause.
IndicatorCheck is_valid_indicator(int n, const std::vector<LabelSet>& family);
/// Same check for an indicator given by its maximal members; closure holds by construction.
IndicatorCheck is_valid_indicator(const ContractionIndicator& c);

Assignment from_indicator(const ContractionIndicator& c);
ContractionIndicator indicator_of(const Assignment& z);

Assignment smooth_part(const Assignment& z);
bool is_smooth(const Assignment& z);

SimpleIntersectingFamily to_family(const ContractionIndicator& c);
ContractionIndicator from_family(const SimpleIntersectingFamily& f);

/// Calls `visit` on every valid indicator of order n, the empty one included.
void for_each_indicator(int n, const std::function<void(const ContractionIndicator&)>& visit);

/// Minimal label sets of size 2..n-2 outside the indicator.
std::vector<LabelSet> minimal_non_members(const ContractionIndicator& c);

struct WeightSearch {
  std::optional<WeightData> weights;
  std::optional<Certificate> certificate;
  /// "unused-label", "single-set", "small-sets", "trivial" or "lp".
  std::string method;
  LinearSystem system;
};

/// Weight data whose assignment contains the indicator's.
WeightSearch exists_weight_superset(const ContractionIndicator& c);

/// Weight data whose assignment equals the indicator's.
WeightSearch is_weight_assignment(const ContractionIndicator& c);

struct Classification {
  int indicators = 0;
  /// One smooth assignment per equivalence class, in discovery order.
  std::vector<Assignment> representatives;
};

/// Groups the smooth assignments of every valid indicator of order n up to equivalence.
Classification classify_smooth(int n, int guard = kDefaultGuard);

/// Edge sets of the complete graph on n vertices in which every two edges share a vertex, the empty set included.
long count_intersecting_edge_sets(int n);

}  // namespace extremal
