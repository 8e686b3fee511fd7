#pragma once

#include <optional>
#include <set>
#include <vector>

#include "monoconv/rational.hpp"

namespace monoconv {

enum class Relation { Equal, GreaterEqual };

struct Constraint {
  RationalVector coeffs;
  Relation relation = Relation::Equal;
  Rational rhs;
};

/// A system of linear equalities and ">=" inequalities over exact rationals.
struct LinearSystem {
  Eigen::Index variables = 0;
  std::vector<Constraint> constraints;

  explicit LinearSystem(Eigen::Index vars = 0) : variables(vars) {}

  LinearSystem& add(RationalVector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
    return *this;
  }
};

/// Feasible(witness) is an engaged optional; Infeasible is std::nullopt.
using Feasibility = std::optional<RationalVector>;

/// Decides whether `sys` has a solution with every variable listed in
/// `nonneg_vars` nonnegative (other variables are free). Phase-1 simplex
/// with Bland's rule over exact rationals, so it always terminates.
/// Throws std::invalid_argument on a constraint of the wrong length.
Feasibility lp_feasible(const LinearSystem& sys, const std::set<Eigen::Index>& nonneg_vars);

/// Convenience: all variables nonnegative.
Feasibility lp_feasible(const LinearSystem& sys);

/// True iff `x` satisfies every constraint of `sys` exactly.
bool satisfies(const LinearSystem& sys, const RationalVector& x);

}  // namespace monoconv
