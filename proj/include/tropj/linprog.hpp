#pragma once

#include <optional>
#include <vector>

#include "tropj/rational.hpp"

namespace tropj {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  std::vector<Rational> x;
  Rational objective;
};

// min c.x subject to A x = b, x >= 0.  Two-phase simplex with Bland's rule,
// all pivoting exact.
LpResult simplex_solve(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c);

// Is target a convex combination of pts?  Exact feasibility test.
bool in_convex_hull(const std::vector<std::vector<Rational>>& pts,
                    const std::vector<Rational>& target);

// One linear constraint over free (sign-unrestricted) variables.
struct LinearConstraint {
  std::vector<Rational> a;
  Rational rhs;
  bool equality = false;  // false: a.x >= rhs
};

// Any solution of the constraint system, or nullopt when infeasible.
std::optional<std::vector<Rational>> solve_constraints(
    const std::vector<LinearConstraint>& cons, size_t nvars);

}  // namespace tropj
