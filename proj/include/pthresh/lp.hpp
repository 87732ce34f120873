#pragma once

#include <string>
#include <vector>

#include "pthresh/rational.hpp"

namespace pthresh {

enum class Relation { GE, LE, EQ };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::GE;
  Rational rhs;
};

// minimize objective . x  subject to constraints and x >= lower.
struct LinearProgram {
  std::vector<std::string> names;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<Rational> lower;  // empty means all zero

  explicit LinearProgram(std::size_t vars = 0);
  std::size_t num_vars() const { return objective.size(); }
  void add(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  Rational lower_bound(std::size_t j) const;

  // Plain text: a `vars` line with names, a `min` line with objective
  // coefficients, then one `c_1 ... c_n <rel> rhs` line per constraint.
  std::string dump() const;
};

struct LpOutcome {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> point;
};

// Two-phase dense simplex with Bland's rule over exact rationals.
LpOutcome solve(const LinearProgram& lp);

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point);

// Dual program written as a minimisation; its optimum is minus the primal
// optimum shifted by `dual_offset(lp)`.
LinearProgram dual_of(const LinearProgram& lp);
Rational dual_offset(const LinearProgram& lp);

// Solve the dual and check strong duality; true when the values agree exactly.
bool duality_audit(const LinearProgram& lp, const LpOutcome& primal);

}  // namespace pthresh
