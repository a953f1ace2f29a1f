#include "extremal/ratlp.hpp"

#include "extremal/errors.hpp"

#include <cstddef>

namespace extremal {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs, std::size_t vars)
      : vars_(vars), m_(rows.size()), cols_(vars + rows.size() + 1), a_(m_, std::vector<Rational>(cols_)),
        b_(rhs), basis_(m_), allowed_(cols_, true) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < vars_; ++j) a_[i][j] = rows[i][j];
      a_[i][vars_ + i] = 1;
      a_[i][artificial()] = -1;
      basis_[i] = vars_ + i;
    }
  }

  std::size_t artificial() const { return cols_ - 1; }

  // Phase 1. Returns false when the system is infeasible.
  bool make_feasible() {
    std::size_t worst = m_;
    for (std::size_t i = 0; i < m_; ++i)
      if (b_[i] < 0 && (worst == m_ || b_[i] < b_[worst])) worst = i;
    if (worst == m_) {
      allowed_[artificial()] = false;
      return true;
    }
    pivot(worst, artificial());
    std::vector<Rational> cost(cols_);
    cost[artificial()] = -1;
    optimize(cost);
    if (value_of(artificial()) > 0) return false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] != artificial()) continue;
      for (std::size_t j = 0; j < cols_ - 1; ++j)
        if (sgn(a_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
    allowed_[artificial()] = false;
    return true;
  }

  // Bland's rule; returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost) {
    while (true) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_ && entering == cols_; ++j) {
        if (!allowed_[j] || is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (sgn(a_[i][j]) != 0 && sgn(cost[basis_[i]]) != 0) reduced -= cost[basis_[i]] * a_[i][j];
        if (reduced > 0) entering = j;
      }
      if (entering == cols_) return true;
      std::size_t leaving = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(a_[i][entering]) <= 0) continue;
        Rational ratio = b_[i] / a_[i][entering];
        if (leaving == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == m_) return false;
      pivot(leaving, entering);
    }
  }

  Rational value_of(std::size_t j) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] == j) return b_[i];
    return 0;
  }

 private:
  bool is_basic(std::size_t j) const {
    for (std::size_t b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = a_[r][c];
    for (auto& x : a_[r])
      if (sgn(x) != 0) x /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  std::size_t vars_, m_, cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

struct Row {
  std::vector<Rational> coeffs;
  Rational bound;
  bool strict = false;
  std::size_t source = 0;
  int sign = 1;
};

std::vector<Row> normalize_rows(const LinearSystem& system) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < system.constraints.size(); ++i) {
    const Constraint& c = system.constraints[i];
    if (static_cast<int>(c.coeffs.size()) != system.variables)
      throw Error("constraint " + std::to_string(i) + " has " + std::to_string(c.coeffs.size()) +
                  " coefficients, expected " + std::to_string(system.variables));
    auto negated = [&] {
      Row r{c.coeffs, -c.bound, false, i, -1};
      for (auto& x : r.coeffs) x = -x;
      return r;
    };
    switch (c.relation) {
      case Relation::Le: rows.push_back({c.coeffs, c.bound, false, i, 1}); break;
      case Relation::Lt: rows.push_back({c.coeffs, c.bound, true, i, 1}); break;
      case Relation::Ge: rows.push_back(negated()); break;
      case Relation::Gt: {
        Row r = negated();
        r.strict = true;
        rows.push_back(std::move(r));
        break;
      }
      case Relation::Eq:
        rows.push_back({c.coeffs, c.bound, false, i, 1});
        rows.push_back(negated());
        break;
    }
  }
  return rows;
}

std::optional<Certificate> search_certificate(const LinearSystem& system, const std::vector<Row>& rows) {
  // Unknowns y_r >= 0: sum y_r a_r = 0, sum y_r b_r <= 0, sum y_r (strict_r - b_r) >= 1.
  const std::size_t count = rows.size();
  std::vector<std::vector<Rational>> lhs;
  std::vector<Rational> rhs;
  for (int j = 0; j < system.variables; ++j) {
    std::vector<Rational> pos(count), neg(count);
    for (std::size_t r = 0; r < count; ++r) {
      pos[r] = rows[r].coeffs[j];
      neg[r] = -rows[r].coeffs[j];
    }
    lhs.push_back(std::move(pos));
    rhs.emplace_back(0);
    lhs.push_back(std::move(neg));
    rhs.emplace_back(0);
  }
  std::vector<Rational> total(count), margin(count);
  for (std::size_t r = 0; r < count; ++r) {
    total[r] = rows[r].bound;
    margin[r] = rows[r].bound - (rows[r].strict ? 1 : 0);
  }
  lhs.push_back(std::move(total));
  rhs.emplace_back(0);
  lhs.push_back(std::move(margin));
  rhs.emplace_back(-1);

  SimplexResult res = simplex_maximize(lhs, rhs, std::vector<Rational>(count));
  if (res.status != SimplexResult::Status::Optimal) return std::nullopt;
  Certificate cert;
  cert.multipliers.assign(system.constraints.size(), 0);
  for (std::size_t r = 0; r < count; ++r) cert.multipliers[rows[r].source] += rows[r].sign * res.point[r];
  return cert;
}

}  // namespace

SimplexResult simplex_maximize(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs,
                               const std::vector<Rational>& objective) {
  const std::size_t vars = objective.size();
  Tableau t(rows, rhs, vars);
  SimplexResult out;
  if (!t.make_feasible()) {
    out.status = SimplexResult::Status::Infeasible;
    return out;
  }
  std::vector<Rational> cost(vars + rows.size() + 1);
  for (std::size_t j = 0; j < vars; ++j) cost[j] = objective[j];
  if (!t.optimize(cost)) {
    out.status = SimplexResult::Status::Unbounded;
    return out;
  }
  out.status = SimplexResult::Status::Optimal;
  out.point.resize(vars);
  out.value = 0;
  for (std::size_t j = 0; j < vars; ++j) {
    out.point[j] = t.value_of(j);
    out.value += objective[j] * out.point[j];
  }
  return out;
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != system.variables) return false;
  for (const auto& c : system.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j) lhs += c.coeffs[j] * point[j];
    bool ok = false;
    switch (c.relation) {
      case Relation::Le: ok = lhs <= c.bound; break;
      case Relation::Lt: ok = lhs < c.bound; break;
      case Relation::Ge: ok = lhs >= c.bound; break;
      case Relation::Gt: ok = lhs > c.bound; break;
      case Relation::Eq: ok = lhs == c.bound; break;
    }
    if (!ok) return false;
  }
  return true;
}

std::optional<std::string> certificate_problem(const LinearSystem& system, const Certificate& cert) {
  if (cert.multipliers.size() != system.constraints.size()) return std::string("wrong multiplier count");
  std::vector<Rational> combined(system.variables);
  Rational bound = 0;
  bool strict_used = false;
  for (std::size_t i = 0; i < system.constraints.size(); ++i) {
    const Constraint& c = system.constraints[i];
    const Rational& y = cert.multipliers[i];
    int s = sgn(y);
    bool upper = c.relation == Relation::Le || c.relation == Relation::Lt;
    bool lower = c.relation == Relation::Ge || c.relation == Relation::Gt;
    if ((upper && s < 0) || (lower && s > 0)) return "multiplier " + std::to_string(i) + " has the wrong sign";
    if (s == 0) continue;
    if (c.relation == Relation::Lt || c.relation == Relation::Gt) strict_used = true;
    for (int j = 0; j < system.variables; ++j) combined[j] += y * c.coeffs[j];
    bound += y * c.bound;
  }
  for (const auto& x : combined)
    if (sgn(x) != 0) return std::string("combination does not cancel the variables");
  if (bound < 0 || (bound == 0 && strict_used)) return std::nullopt;
  return "combination yields 0 <= " + to_string(bound) + ", which is not a contradiction";
}

LpResult feasible(const LinearSystem& system) {
  if (system.variables < 0) throw Error("negative variable count");
  std::vector<Row> rows = normalize_rows(system);
  bool any_strict = false;
  for (const auto& r : rows) any_strict = any_strict || r.strict;

  // Columns: x+ (k), x- (k), then delta+ and delta- when strict rows exist.
  const std::size_t k = static_cast<std::size_t>(system.variables);
  const std::size_t width = 2 * k + (any_strict ? 2 : 0);
  std::vector<std::vector<Rational>> lhs;
  std::vector<Rational> rhs;
  for (const auto& r : rows) {
    std::vector<Rational> line(width);
    for (std::size_t j = 0; j < k; ++j) {
      line[j] = r.coeffs[j];
      line[k + j] = -r.coeffs[j];
    }
    if (r.strict) {
      line[2 * k] = 1;
      line[2 * k + 1] = -1;
    }
    lhs.push_back(std::move(line));
    rhs.push_back(r.bound);
  }
  std::vector<Rational> objective(width);
  if (any_strict) {
    std::vector<Rational> cap(width);
    cap[2 * k] = 1;
    cap[2 * k + 1] = -1;
    lhs.push_back(std::move(cap));
    rhs.emplace_back(1);
    objective[2 * k] = 1;
    objective[2 * k + 1] = -1;
  }
  SimplexResult res = simplex_maximize(lhs, rhs, objective);
  LpResult out;
  if (res.status == SimplexResult::Status::Optimal && (!any_strict || res.value > 0)) {
    std::vector<Rational> x(k);
    for (std::size_t j = 0; j < k; ++j) x[j] = res.point[j] - res.point[k + j];
    if (!satisfies(system, x)) throw Error("internal error: simplex witness fails replay");
    out.witness = std::move(x);
    return out;
  }
  out.certificate = search_certificate(system, rows);
  if (!out.certificate) throw Error("internal error: neither witness nor certificate found");
  if (auto problem = certificate_problem(system, *out.certificate))
    throw Error("internal error: certificate fails replay: " + *problem);
  return out;
}

}  // namespace extremal
