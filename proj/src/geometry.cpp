#include "extremal/geometry.hpp"

#include <algorithm>
#include <functional>

namespace extremal {

LabelSet canonical_boundary(int n, LabelSet j) {
  if (!is_subset(j, full_set(n)) || set_size(j) < 2 || set_size(j) > n - 2)
    throw Error("boundary class " + format_set(j) + " needs between 2 and n-2 labels");
  return has_label(j, 1) ? j : full_set(n) & ~j;
}

FCurve FCurve::make(int n, std::array<LabelSet, 4> parts) {
  LabelSet seen = 0;
  for (LabelSet p : parts) {
    if (p == 0) throw Error("F-curve parts must be nonempty");
    if (seen & p) throw Error("F-curve parts overlap");
    seen |= p;
  }
  if (seen != full_set(n)) throw Error("F-curve parts must cover 1.." + std::to_string(n));
  std::sort(parts.begin(), parts.end(), [](LabelSet a, LabelSet b) { return min_label(a) < min_label(b); });
  return {n, parts};
}

FType ftype_of(const FCurve& f) {
  FType t;
  for (int i = 0; i < 4; ++i) t[i] = set_size(f.parts[i]);
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

FType make_ftype(int n, std::array<int, 4> sizes) {
  int total = 0;
  for (int s : sizes) {
    if (s < 1) throw Error("F-curve type entries must be positive");
    total += s;
  }
  if (total != n) throw Error("F-curve type must sum to " + std::to_string(n));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

namespace {

constexpr int kSplits[3][2] = {{0, 1}, {0, 2}, {0, 3}};

int fold(int n, int s) { return std::min(s, n - s); }

}  // namespace

int intersect(const FCurve& f, LabelSet j) {
  const int n = f.n;
  LabelSet canon = canonical_boundary(n, j);
  int value = 0;
  for (const auto& split : kSplits) {
    LabelSet side = f.parts[split[0]] | f.parts[split[1]];
    if (canonical_boundary(n, side) == canon) ++value;
  }
  for (LabelSet part : f.parts)
    if (set_size(part) >= 2 && set_size(part) <= n - 2 && canonical_boundary(n, part) == canon) --value;
  return value;
}

int intersect_sym(int n, const FType& type, int k) {
  if (k < 2 || 2 * k > n) throw Error("symmetric class index must lie in 2..n/2");
  int value = 0;
  for (const auto& split : kSplits)
    if (fold(n, type[split[0]] + type[split[1]]) == k) ++value;
  for (int s : type)
    if (fold(n, s) == k) --value;
  return value;
}

Rational pair(const FCurve& f, const Divisor& d) {
  if (f.n != d.n) throw Error("curve and divisor have different label counts");
  Rational total = 0;
  for (const auto& [j, c] : d.coeffs) total += c * intersect(f, j);
  return total;
}

Rational pair_sym(int n, const FType& type, const SymmetricDivisor& d) {
  if (n != d.n) throw Error("curve type and divisor have different label counts");
  Rational total = 0;
  for (const auto& [k, c] : d.coeffs) total += c * intersect_sym(n, type, k);
  return total;
}

std::vector<FCurve> all_fcurves(int n) {
  std::vector<FCurve> out;
  for (const auto& p : all_set_partitions(n, 4, 4))
    out.push_back(FCurve::make(n, {p.blocks()[0], p.blocks()[1], p.blocks()[2], p.blocks()[3]}));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FType> all_ftypes(int n) {
  std::vector<FType> out;
  for (const auto& p : all_integer_partitions(n, 4, 4))
    out.push_back({p.parts()[0], p.parts()[1], p.parts()[2], p.parts()[3]});
  return out;
}

std::vector<LabelSet> all_boundaries(int n) {
  std::vector<LabelSet> out;
  for (LabelSet s = 1; s < full_set(n); ++s)
    if (has_label(s, 1) && set_size(s) >= 2 && set_size(s) <= n - 2) out.push_back(s);
  return out;
}

std::vector<FCurve> contracted_fcurves(const Assignment& z) {
  std::vector<FCurve> out;
  for (const auto& f : all_fcurves(z.n())) {
    BasicPair star = star_tree(SetPartition(z.n(), {f.parts.begin(), f.parts.end()}));
    if (member(z, star.tree, star.center)) out.push_back(f);
  }
  return out;
}

std::vector<FType> contracted_ftypes(const InvariantAssignment& f) {
  std::vector<FType> out;
  for (const auto& t : all_ftypes(f.n())) {
    IntegerPartition s({t.begin(), t.end()});
    if (std::any_of(f.generators().begin(), f.generators().end(), [&](const IntegerPartition& p) { return int_leq(s, p); }))
      out.push_back(t);
  }
  return out;
}

FnefResult fnef_witness(int n, const std::vector<FCurve>& contracted) {
  FnefResult out;
  out.columns = all_boundaries(n);
  out.rows = all_fcurves(n);
  out.system.variables = static_cast<int>(out.columns.size());
  for (const auto& f : contracted)
    if (f.n != n || !std::binary_search(out.rows.begin(), out.rows.end(), f))
      throw Error("contracted curve is not an F-curve of order " + std::to_string(n));
  for (const auto& f : out.rows) {
    std::vector<Rational> row;
    for (LabelSet j : out.columns) row.emplace_back(intersect(f, j));
    bool zero = std::find(contracted.begin(), contracted.end(), f) != contracted.end();
    out.system.add(std::move(row), zero ? Relation::Eq : Relation::Ge, zero ? 0 : 1);
  }
  LpResult r = feasible(out.system);
  out.certificate = r.certificate;
  if (r.witness) {
    Divisor d{n, {}};
    for (std::size_t i = 0; i < out.columns.size(); ++i)
      if ((*r.witness)[i] != 0) d.coeffs[out.columns[i]] = (*r.witness)[i];
    out.witness = std::move(d);
  }
  return out;
}

FnefSymResult fnef_witness_sym(int n, const std::vector<FType>& contracted) {
  FnefSymResult out;
  out.rows = all_ftypes(n);
  out.system.variables = n / 2 - 1;
  for (const auto& t : contracted)
    if (std::find(out.rows.begin(), out.rows.end(), t) == out.rows.end())
      throw Error("contracted type is not an F-curve type of order " + std::to_string(n));
  for (const auto& t : out.rows) {
    std::vector<Rational> row;
    for (int k = 2; 2 * k <= n; ++k) row.emplace_back(intersect_sym(n, t, k));
    bool zero = std::find(contracted.begin(), contracted.end(), t) != contracted.end();
    out.system.add(std::move(row), zero ? Relation::Eq : Relation::Ge, zero ? 0 : 1);
  }
  LpResult r = feasible(out.system);
  out.certificate = r.certificate;
  if (r.witness) {
    SymmetricDivisor d{n, {}};
    for (int k = 2; 2 * k <= n; ++k)
      if ((*r.witness)[k - 2] != 0) d.coeffs[k] = (*r.witness)[k - 2];
    out.witness = std::move(d);
  }
  return out;
}

RayCheck verify_ray(const SymmetricDivisor& d) {
  RayCheck out;
  for (const auto& t : all_ftypes(d.n)) {
    Rational v = pair_sym(d.n, t, d);
    if (v == 0) out.zero_set.push_back(t);
    if (v < 0) out.all_nonnegative = false;
  }
  return out;
}

}  // namespace extremal
