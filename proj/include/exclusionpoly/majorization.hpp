#pragma once

#include <vector>

#include "exclusionpoly/rational.hpp"

namespace exclusionpoly {

/// Permutation as an image table: pi maps position i to pi[i] (0-based).
using Permutation = std::vector<int>;

struct WeightedPermutation {
  Rational weight;      // in (0, 1]
  Permutation perm;
};

/// Convex combination of distinct permutation matrices; weights sum to one.
struct PermutationCombination {
  std::vector<WeightedPermutation> terms;

  /// Applies sum_t weight_t * P_t to a vector: entry i of P_t x is x[perm[i]].
  RationalVector apply(const RationalVector& x) const;

  /// Reassembles the doubly stochastic matrix the combination represents.
  RationalMatrix to_matrix() const;
};

RationalVector sort_desc(RationalVector v);

/// v majorized by w: every descending prefix sum of v is bounded by the one
/// of w and the totals agree. Non-strict comparisons; ties are legal.
bool majorizes(const RationalVector& v, const RationalVector& w);

bool is_doubly_stochastic(const RationalMatrix& m);

/**
 * Constructive Hardy-Littlewood-Polya transfer: for v majorized by w returns
 * a doubly stochastic M with M * sort_desc(w) = sort_desc(v), built from at
 * most d-1 Robin Hood transfers between a surplus and a deficit coordinate.
 * Throws MajorizationError when the precondition fails.
 */
RationalMatrix hlp_transfer(const RationalVector& v, const RationalVector& w);

/**
 * Birkhoff-von Neumann decomposition of a doubly stochastic matrix into a
 * convex combination of at most (d-1)^2 + 1 permutation matrices. Greedy
 * extraction along lexicographically smallest perfect matchings of the
 * support graph, followed by a Caratheodory reduction should the greedy pass
 * ever exceed the bound.
 */
PermutationCombination birkhoff_decompose(const RationalMatrix& m);

/// Schur-Horn compatibility of a diagonal with a spectrum: diag majorized by
/// spectrum.
bool schur_horn_check(const RationalVector& diag, const RationalVector& spectrum);

}  // namespace exclusionpoly
