#pragma once

#include <vector>

#include "exclusionpoly/polytope.hpp"
#include "exclusionpoly/rational.hpp"

namespace exclusionpoly {

/**
 * One generalized exclusion constraint on the sorted spectrum, with integer
 * coefficients on the lambda entries, integer coefficients on the leading
 * four weights, and a bound affine in the particle number:
 *
 *   sum_i lambda_coeffs[i] * lambda_i  <=
 *       constant_n_coeff * N + constant_offset + sum_k weight_coeffs[k] * w_k
 */
struct SymbolicInequality {
  int family = 0;  // 1..5, stable across settings; families 1..3 appear at
                   // r = 1..3, families 4 and 5 both appear at r = 4
  int first_r = 0;
  int n = 0;
  int d = 0;
  std::vector<long> lambda_coeffs;  // length d
  std::vector<long> weight_coeffs;  // length 4
  long constant_n_coeff = 0;
  long constant_offset = 0;

  Rational bound(const WeightVector& w) const;
  Rational lhs(const RationalVector& sorted_lambda) const;
};

struct EvaluationResult {
  bool satisfied = false;
  Rational slack;  // bound - lhs, exact
};

/**
 * The closed-form constraint families for a setting with r nonzero weights,
 * instantiated at (N, d): exactly 1, 2, 3, 5 inequalities for r = 1..4.
 * Lambda positions beyond d are dropped (those entries are zero anyway).
 * The one degenerate exception is (r, N) = (4, 1), where the first of the
 * two r=4 families has no valid instantiation and 4 inequalities come back.
 */
std::vector<SymbolicInequality> constraints_for_r(int r, int n, int d);

/// Exact slack evaluation; lambda must already be sorted non-increasingly.
EvaluationResult evaluate(const SymbolicInequality& ineq, const RationalVector& lambda,
                          const WeightVector& w);

/// Families present in setting r but absent from setting r-1.
std::vector<SymbolicInequality> hierarchy_delta(int r, int n, int d);

/// All constraints of the setting satisfied (r = number of positive weights,
/// capped at 4). Lambda must be sorted non-increasingly.
bool all_satisfied(const RationalVector& sorted_lambda, const WeightVector& w, int n, int d);

}  // namespace exclusionpoly
