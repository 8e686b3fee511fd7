#include "monoconv/lp.hpp"

#include <stdexcept>
#include <string>

namespace monoconv {

namespace {

using Tableau = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void check_shape(const LinearSystem& sys, const std::set<Eigen::Index>& nonneg_vars) {
  if (sys.variables < 0) throw std::invalid_argument("lp_feasible: negative variable count");
  for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
    if (sys.constraints[i].coeffs.size() != sys.variables) {
      throw std::invalid_argument("lp_feasible: constraint " + std::to_string(i) + " has " +
                                  std::to_string(sys.constraints[i].coeffs.size()) +
                                  " coefficients, expected " + std::to_string(sys.variables));
    }
  }
  for (Eigen::Index v : nonneg_vars) {
    if (v < 0 || v >= sys.variables) {
      throw std::invalid_argument("lp_feasible: nonnegative variable index out of range");
    }
  }
}

// Subtract `factor` times the pivot row from `target`, touching only the
// pivot row's nonzero columns.
void eliminate(Tableau& t, Eigen::Index target, Eigen::Index pivot_row, const Rational& factor,
               const std::vector<Eigen::Index>& support) {
  for (Eigen::Index j : support) t(target, j) -= factor * t(pivot_row, j);
}

}  // namespace

Feasibility lp_feasible(const LinearSystem& sys, const std::set<Eigen::Index>& nonneg_vars) {
  check_shape(sys, nonneg_vars);
  const auto rows = static_cast<Eigen::Index>(sys.constraints.size());
  if (rows == 0) return RationalVector::Zero(sys.variables);

  // Column layout: [x+ (and x- for free vars)] [surplus per >= row] [artificial per row] [rhs]
  std::vector<Eigen::Index> pos_col(sys.variables), neg_col(sys.variables, -1);
  Eigen::Index cols = 0;
  for (Eigen::Index v = 0; v < sys.variables; ++v) {
    pos_col[v] = cols++;
    if (!nonneg_vars.contains(v)) neg_col[v] = cols++;
  }
  std::vector<Eigen::Index> surplus_col(rows, -1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (sys.constraints[i].relation == Relation::GreaterEqual) surplus_col[i] = cols++;
  }
  const Eigen::Index art_start = cols;
  const Eigen::Index total = cols + rows;
  const Eigen::Index rhs = total;

  Tableau t = Tableau::Zero(rows, total + 1);
  std::vector<Eigen::Index> basis(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Constraint& c = sys.constraints[i];
    for (Eigen::Index v = 0; v < sys.variables; ++v) {
      if (c.coeffs(v) == 0) continue;
      t(i, pos_col[v]) = c.coeffs(v);
      if (neg_col[v] >= 0) t(i, neg_col[v]) = -c.coeffs(v);
    }
    if (surplus_col[i] >= 0) t(i, surplus_col[i]) = Rational(-1);
    t(i, rhs) = c.rhs;
    if (c.rhs < 0) t.row(i) = -t.row(i);
    t(i, art_start + i) = Rational(1);
    basis[i] = art_start + i;
  }

  // Reduced costs of the phase-1 objective (sum of artificials), and the
  // negated objective value in the rhs slot.
  VectorX<Rational> z = VectorX<Rational>::Zero(total + 1);
  for (Eigen::Index j = 0; j <= total; ++j) {
    if (j >= art_start && j < total) continue;
    Rational s = 0;
    for (Eigen::Index i = 0; i < rows; ++i) s -= t(i, j);
    z(j) = s;
  }

  std::vector<Eigen::Index> support;
  while (true) {
    // Bland: lowest-index improving column. Artificials never re-enter.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < art_start; ++j) {
      if (z(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave < 0) throw std::logic_error("lp_feasible: phase-1 objective unbounded");

    const Rational inv = Rational(1) / t(leave, enter);
    support.clear();
    for (Eigen::Index j = 0; j <= total; ++j) {
      if (t(leave, j) == 0) continue;
      t(leave, j) *= inv;
      support.push_back(j);
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational f = t(i, enter);
      eliminate(t, i, leave, f, support);
    }
    if (z(enter) != 0) {
      const Rational f = z(enter);
      for (Eigen::Index j : support) z(j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  if (z(rhs) != 0) return std::nullopt;

  VectorX<Rational> column_values = VectorX<Rational>::Zero(total);
  for (Eigen::Index i = 0; i < rows; ++i) column_values(basis[i]) = t(i, rhs);
  RationalVector x(sys.variables);
  for (Eigen::Index v = 0; v < sys.variables; ++v) {
    x(v) = column_values(pos_col[v]);
    if (neg_col[v] >= 0) x(v) -= column_values(neg_col[v]);
  }
  return x;
}

Feasibility lp_feasible(const LinearSystem& sys) {
  std::set<Eigen::Index> all;
  for (Eigen::Index v = 0; v < sys.variables; ++v) all.insert(all.end(), v);
  return lp_feasible(sys, all);
}

bool satisfies(const LinearSystem& sys, const RationalVector& x) {
  if (x.size() != sys.variables) return false;
  for (const Constraint& c : sys.constraints) {
    Rational lhs = 0;
    for (Eigen::Index v = 0; v < sys.variables; ++v) lhs += c.coeffs(v) * x(v);
    if (c.relation == Relation::Equal ? lhs != c.rhs : lhs < c.rhs) return false;
  }
  return true;
}

}  // namespace monoconv
