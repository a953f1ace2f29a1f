#pragma once

#include "extremal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace extremal {

enum class Relation { Le, Eq, Ge, Lt, Gt };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::Le;
  Rational bound;
};

struct LinearSystem {
  int variables = 0;
  std::vector<Constraint> constraints;

  void add(std::vector<Rational> coeffs, Relation relation, Rational bound) {
    constraints.push_back({std::move(coeffs), relation, std::move(bound)});
  }
};

/// Multipliers, one per constraint, proving infeasibility.
///
/// Signs: >= 0 on Le/Lt rows, <= 0 on Ge/Gt rows, free on Eq rows. Summing
/// multiplier * (row) gives 0 <= sum(multiplier * bound) with a zero left-hand
/// side; the certificate is valid when that sum is negative, or zero while some
/// strict row has a nonzero multiplier.
struct Certificate {
  std::vector<Rational> multipliers;
};

struct LpResult {
  std::optional<std::vector<Rational>> witness;
  std::optional<Certificate> certificate;
  bool feasible() const { return witness.has_value(); }
};

/// Decides feasibility exactly. Variables are free (unbounded in sign).
/// Every returned witness or certificate has already been replayed.
LpResult feasible(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const std::vector<Rational>& point);

/// Empty when the certificate is valid, otherwise the reason it is not.
std::optional<std::string> certificate_problem(const LinearSystem& system, const Certificate& cert);

/// Optimization core, exposed for testing: maximize objective . z subject to
/// rows . z <= rhs and z >= 0, by two-phase simplex with Bland's rule.
struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
  std::vector<Rational> point;
  Rational value;
};
SimplexResult simplex_maximize(const std::vector<std::vector<Rational>>& rows,
                               const std::vector<Rational>& rhs,
                               const std::vector<Rational>& objective);

}  // namespace extremal
