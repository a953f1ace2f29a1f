#pragma once

#include "extremal/assignments.hpp"
#include "extremal/invariant.hpp"
#include "extremal/ratlp.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace extremal {

/// Representative of {J, J^c} containing label 1. Throws unless both sides have at least two labels.
LabelSet canonical_boundary(int n, LabelSet j);

/// Four disjoint nonempty label sets covering 1..n, ordered by minimum label.
struct FCurve {
  int n = 0;
  std::array<LabelSet, 4> parts{};

  /// Throws unless the parts form a partition of 1..n into four nonempty sets.
  static FCurve make(int n, std::array<LabelSet, 4> parts);

  bool operator==(const FCurve&) const = default;
  auto operator<=>(const FCurve&) const = default;
};

/// Part sizes of an F-curve, descending.
using FType = std::array<int, 4>;

FType ftype_of(const FCurve& f);
/// Throws unless the sizes are positive and sum to n.
FType make_ftype(int n, std::array<int, 4> sizes);

/// Boundary classes keyed by canonical representative; zero coefficients are dropped.
struct Divisor {
  int n = 0;
  std::map<LabelSet, Rational> coeffs;
  bool operator==(const Divisor&) const = default;
};

/// Combination of the symmetric classes D_k, k = 2..n/2.
struct SymmetricDivisor {
  int n = 0;
  std::map<int, Rational> coeffs;
  bool operator==(const SymmetricDivisor&) const = default;
};

int intersect(const FCurve& f, LabelSet j);
int intersect_sym(int n, const FType& type, int k);

Rational pair(const FCurve& f, const Divisor& d);
Rational pair_sym(int n, const FType& type, const SymmetricDivisor& d);

std::vector<FCurve> all_fcurves(int n);
std::vector<FType> all_ftypes(int n);
/// Canonical boundary representatives, increasing mask order.
std::vector<LabelSet> all_boundaries(int n);

std::vector<FCurve> contracted_fcurves(const Assignment& z);
std::vector<FType> contracted_ftypes(const InvariantAssignment& f);

struct FnefResult {
  std::optional<Divisor> witness;
  std::optional<Certificate> certificate;
  LinearSystem system;
  std::vector<FCurve> rows;         // F-curve behind each constraint
  std::vector<LabelSet> columns;    // boundary class behind each variable
};

struct FnefSymResult {
  std::optional<SymmetricDivisor> witness;
  std::optional<Certificate> certificate;
  LinearSystem system;
  std::vector<FType> rows;
};

/// Looks for a divisor pairing to zero exactly with the contracted curves and positively elsewhere.
FnefResult fnef_witness(int n, const std::vector<FCurve>& contracted);
FnefSymResult fnef_witness_sym(int n, const std::vector<FType>& contracted);

struct RayCheck {
  std::vector<FType> zero_set;
  bool all_nonnegative = true;
};

RayCheck verify_ray(const SymmetricDivisor& d);

}  // namespace extremal
