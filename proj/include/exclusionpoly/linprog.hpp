#pragma once

#include <optional>
#include <vector>

#include "exclusionpoly/rational.hpp"

namespace exclusionpoly {

struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
};

/**
 * An exact-rational linear program
 *
 *     minimize  objective . x
 *     such that eq[i].coeffs . x  = eq[i].rhs
 *               leq[i].coeffs . x <= leq[i].rhs
 *
 * Variables are free unless marked nonnegative. If `objective` is absent the
 * program is a pure feasibility system.
 */
struct LinearProgram {
  int num_vars = 0;
  std::optional<RationalVector> objective;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
  std::vector<bool> nonnegative;  // empty means all variables free

  void require_well_formed() const;
};

/// Multipliers proving infeasibility: summing eq rows with eq_multipliers and
/// leq rows with the (nonnegative) leq_multipliers cancels every free
/// variable, leaves nonnegative coefficients on sign-restricted ones, and a
/// strictly negative right-hand side.
struct FarkasCertificate {
  RationalVector eq_multipliers;
  RationalVector leq_multipliers;
};

struct FeasibilityResult {
  bool feasible = false;
  RationalVector witness;                       // set when feasible
  std::optional<FarkasCertificate> certificate; // set when infeasible
};

struct OptimizationResult {
  Rational value;
  RationalVector minimizer;  // a basic feasible point of the system
};

/// Exact feasibility via phase-one simplex with Bland's rule. Deterministic:
/// identical programs produce identical witnesses.
FeasibilityResult lp_feasible(const LinearProgram& lp);

/// Exact optimum via two-phase simplex with Bland's rule. Throws
/// LpInfeasibleError / LpUnboundedError.
OptimizationResult lp_minimize(const LinearProgram& lp);
OptimizationResult lp_maximize(const LinearProgram& lp);

}  // namespace exclusionpoly
