#include "extremal/smooth.hpp"

#include <algorithm>

namespace extremal {

namespace {

std::vector<LabelSet> maximal_only(std::vector<LabelSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<LabelSet> out;
  for (LabelSet s : sets)
    if (std::none_of(sets.begin(), sets.end(), [s](LabelSet t) { return t != s && is_subset(s, t); }))
      out.push_back(s);
  return out;
}

bool size_in_range(int n, LabelSet s) { return set_size(s) >= 2 && set_size(s) <= n - 2; }

// The partition seen by the vertex carrying `side` on a two-vertex tree.
SetPartition two_vertex_partition(int n, LabelSet side) {
  std::vector<LabelSet> blocks{full_set(n) & ~side};
  for (int l : labels_of(side)) blocks.push_back(label_bit(l));
  return SetPartition(n, std::move(blocks));
}

std::vector<Rational> indicator_row(int n, LabelSet s) {
  std::vector<Rational> row(n, 0);
  for (int l : labels_of(s)) row[l - 1] = 1;
  return row;
}

LinearSystem superset_system(const ContractionIndicator& c) {
  const int n = c.n;
  LinearSystem sys;
  sys.variables = n;
  for (LabelSet b : c.maximal) sys.add(indicator_row(n, b), Relation::Le, 1);
  for (int i = 1; i <= n; ++i) {
    sys.add(indicator_row(n, label_bit(i)), Relation::Gt, 0);
    sys.add(indicator_row(n, label_bit(i)), Relation::Le, 1);
  }
  sys.add(indicator_row(n, full_set(n)), Relation::Gt, 2);
  return sys;
}

WeightData uniform(int n, const Rational& value) { return WeightData(n, value); }

std::optional<std::pair<WeightData, std::string>> closed_form(const ContractionIndicator& c) {
  const int n = c.n;
  std::vector<int> holders(n + 1, 0);
  std::vector<LabelSet> holder(n + 1, 0);
  for (LabelSet b : c.maximal)
    for (int l : labels_of(b)) {
      ++holders[l];
      holder[l] = b;
    }
  for (int j = 1; j <= n; ++j)
    if (holders[j] == 0) {
      WeightData a = uniform(n, Rational(1, n - 2));
      a[j - 1] = 1;
      return std::make_pair(a, std::string("unused-label"));
    }
  for (int j = 1; j <= n; ++j)
    if (holders[j] == 1) {
      const int len = set_size(holder[j]);
      Rational eps(1, n * (n - len));
      WeightData a = uniform(n, Rational(1, n - len) + eps);
      for (int l : labels_of(holder[j])) a[l - 1] = eps;
      a[j - 1] = 1 - (len - 1) * eps;
      return std::make_pair(a, std::string("single-set"));
    }
  bool small = std::all_of(c.maximal.begin(), c.maximal.end(), [n](LabelSet b) { return 2 * set_size(b) < n; });
  if (small) return std::make_pair(uniform(n, Rational(2, n) + Rational(1, n * (n - 1))), std::string("small-sets"));
  return std::nullopt;
}

WeightSearch solve(LinearSystem sys) {
  WeightSearch out;
  LpResult r = feasible(sys);
  out.method = "lp";
  if (r.witness) out.weights = *r.witness;
  out.certificate = r.certificate;
  out.system = std::move(sys);
  return out;
}

void require_valid(const ContractionIndicator& c) {
  IndicatorCheck check = is_valid_indicator(c);
  if (!check.valid) throw Error("invalid contraction indicator: " + *check.violation);
}

}  // namespace

ContractionIndicator ContractionIndicator::from_sets(int n, std::vector<LabelSet> sets) {
  return {n, maximal_only(std::move(sets))};
}

bool ContractionIndicator::contains(LabelSet s) const {
  if (set_size(s) < 2) return false;
  return std::any_of(maximal.begin(), maximal.end(), [s](LabelSet b) { return is_subset(s, b); });
}

std::vector<LabelSet> ContractionIndicator::closure() const {
  std::vector<LabelSet> out;
  for (LabelSet s = 1; s < full_set(n); ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

IndicatorCheck is_valid_indicator(int n, const std::vector<LabelSet>& family) {
  auto fail = [](std::string why) { return IndicatorCheck{false, std::move(why)}; };
  if (n < 3 || n > kMaxLabels) return fail("label count out of range");
  std::vector<LabelSet> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  for (LabelSet b : sorted)
    if (!is_subset(b, full_set(n)) || !size_in_range(n, b))
      return fail(format_set(b) + " does not have between 2 and n-2 labels");
  for (LabelSet b : sorted)
    for (int l : labels_of(b)) {
      LabelSet sub = b & ~label_bit(l);
      if (set_size(sub) >= 2 && !std::binary_search(sorted.begin(), sorted.end(), sub))
        return fail(format_set(sub) + " is missing below " + format_set(b));
    }
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if ((sorted[i] | sorted[j]) == full_set(n))
        return fail(format_set(sorted[i]) + " and " + format_set(sorted[j]) + " cover every label");
  return {};
}

IndicatorCheck is_valid_indicator(const ContractionIndicator& c) {
  if (c.n < 3 || c.n > kMaxLabels) return {false, std::string("label count out of range")};
  for (LabelSet b : c.maximal)
    if (!is_subset(b, full_set(c.n)) || !size_in_range(c.n, b))
      return {false, format_set(b) + " does not have between 2 and n-2 labels"};
  for (std::size_t i = 0; i < c.maximal.size(); ++i)
    for (std::size_t j = i + 1; j < c.maximal.size(); ++j)
      if ((c.maximal[i] | c.maximal[j]) == full_set(c.n))
        return {false, format_set(c.maximal[i]) + " and " + format_set(c.maximal[j]) + " cover every label"};
  return {};
}

Assignment from_indicator(const ContractionIndicator& c) {
  require_valid(c);
  std::vector<SetPartition> gens;
  for (LabelSet b : c.maximal) gens.push_back(two_vertex_partition(c.n, b));
  return normalize(c.n, std::move(gens));
}

ContractionIndicator indicator_of(const Assignment& z) {
  const int n = z.n();
  std::vector<LabelSet> found;
  for (LabelSet s = 1; s < full_set(n); ++s) {
    if (!size_in_range(n, s)) continue;
    SetPartition bp = two_vertex_partition(n, s);
    if (std::any_of(z.generators().begin(), z.generators().end(), [&](const SetPartition& p) { return leq(bp, p); }))
      found.push_back(s);
  }
  return ContractionIndicator::from_sets(n, std::move(found));
}

Assignment smooth_part(const Assignment& z) { return from_indicator(indicator_of(z)); }

bool is_smooth(const Assignment& z) { return smooth_part(z) == z; }

SimpleIntersectingFamily to_family(const ContractionIndicator& c) {
  require_valid(c);
  SimpleIntersectingFamily f{c.n, {}};
  for (LabelSet b : c.maximal) f.edges.push_back(full_set(c.n) & ~b);
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

ContractionIndicator from_family(const SimpleIntersectingFamily& f) {
  const int n = f.n;
  if (n < 3 || n > kMaxLabels) throw Error("label count out of range");
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    LabelSet e = f.edges[i];
    if (!is_subset(e, full_set(n)) || !size_in_range(n, e))
      throw Error("edge " + format_set(e) + " does not have between 2 and n-2 labels");
    for (std::size_t j = 0; j < f.edges.size(); ++j) {
      if (i == j) continue;
      if (is_subset(e, f.edges[j])) throw Error("edges " + format_set(e) + " and " + format_set(f.edges[j]) + " are nested");
      if ((e & f.edges[j]) == 0) throw Error("edges " + format_set(e) + " and " + format_set(f.edges[j]) + " are disjoint");
    }
  }
  std::vector<LabelSet> sets;
  for (LabelSet e : f.edges) sets.push_back(full_set(n) & ~e);
  return ContractionIndicator::from_sets(n, std::move(sets));
}

void for_each_indicator(int n, const std::function<void(const ContractionIndicator&)>& visit) {
  std::vector<LabelSet> candidates;
  for (LabelSet s = 1; s < full_set(n); ++s)
    if (size_in_range(n, s)) candidates.push_back(s);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](LabelSet a, LabelSet b) { return set_size(a) > set_size(b); });
  std::vector<LabelSet> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t next) {
    if (next == candidates.size()) {
      visit(ContractionIndicator::from_sets(n, chosen));
      return;
    }
    walk(next + 1);
    LabelSet s = candidates[next];
    for (LabelSet t : chosen)
      if (is_subset(s, t) || (s | t) == full_set(n)) return;
    chosen.push_back(s);
    walk(next + 1);
    chosen.pop_back();
  };
  walk(0);
}

std::vector<LabelSet> minimal_non_members(const ContractionIndicator& c) {
  std::vector<LabelSet> out;
  for (LabelSet s = 1; s < full_set(c.n); ++s) {
    if (!size_in_range(c.n, s) || c.contains(s)) continue;
    bool minimal = true;
    for (int l : labels_of(s)) {
      LabelSet sub = s & ~label_bit(l);
      if (set_size(sub) >= 2 && !c.contains(sub)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

WeightSearch exists_weight_superset(const ContractionIndicator& c) {
  require_valid(c);
  LinearSystem sys = superset_system(c);
  if (auto guess = closed_form(c); guess && satisfies(sys, guess->first)) {
    WeightSearch out;
    out.weights = guess->first;
    out.method = guess->second;
    out.system = std::move(sys);
    return out;
  }
  return solve(std::move(sys));
}

WeightSearch is_weight_assignment(const ContractionIndicator& c) {
  require_valid(c);
  LinearSystem sys = superset_system(c);
  for (LabelSet b : minimal_non_members(c)) sys.add(indicator_row(c.n, b), Relation::Gt, 1);
  if (c.maximal.empty()) {
    WeightData ones = uniform(c.n, 1);
    if (satisfies(sys, ones)) {
      WeightSearch out;
      out.weights = ones;
      out.method = "trivial";
      out.system = std::move(sys);
      return out;
    }
  }
  return solve(std::move(sys));
}

Classification classify_smooth(int n, int guard) {
  Classification out;
  for_each_indicator(n, [&](const ContractionIndicator& c) {
    ++out.indicators;
    Assignment z = from_indicator(c);
    for (const auto& rep : out.representatives)
      if (equivalent(z, rep, guard)) return;
    out.representatives.push_back(std::move(z));
  });
  return out;
}

long count_intersecting_edge_sets(int n) {
  std::vector<LabelSet> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back(label_bit(u) | label_bit(v));
  long count = 0;
  std::vector<LabelSet> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t next) {
    if (next == edges.size()) {
      ++count;
      return;
    }
    walk(next + 1);
    for (LabelSet e : chosen)
      if ((e & edges[next]) == 0) return;
    chosen.push_back(edges[next]);
    walk(next + 1);
    chosen.pop_back();
  };
  walk(0);
  return count;
}

}  // namespace extremal
