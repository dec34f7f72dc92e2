#pragma once

#include <optional>
#include <vector>

#include "exclusionpoly/configurations.hpp"
#include "exclusionpoly/hull.hpp"
#include "exclusionpoly/linprog.hpp"
#include "exclusionpoly/rational.hpp"

namespace exclusionpoly {

/// Decreasingly ordered nonnegative weights summing to one; r counts the
/// strictly positive entries.
struct WeightVector {
  RationalVector weights;
  int r = 0;

  WeightVector() = default;
  explicit WeightVector(RationalVector w);

  /// Entry j (1-based), zero beyond the stored length.
  Rational at(int j) const;

  /// Canonical generic weights for a given r: w_j proportional to the
  /// (r+1-j)-th prime, so all entries are distinct.
  static WeightVector generic(int r);
};

/**
 * Generating vertices of the spectral polytope: one per realizable lineup,
 * each the weight-mixed occupation vector of its lineup, deduplicated. The
 * full polytope is the convex hull of all coordinate permutations of these.
 */
struct VertexSet {
  int n = 0;
  int d = 0;
  WeightVector weight;
  std::vector<RationalVector> vertices;  // decreasing entries, each sums to n
  std::vector<Lineup> provenance;        // parallel to vertices
  bool merged_duplicates = false;
};

struct MembershipCertificate {
  bool inside = false;
  RationalVector simplex_coefficients;            // when inside
  int violated_prefix = 0;                        // when outside: 1-based k
  std::optional<FarkasCertificate> lp_certificate;  // retained on LP-derived rejection
};

/// Inner/outer permutohedron generators: prefix sums of v_minus (v_plus) are
/// the minimum (maximum) of the generating vertices' prefix sums.
struct ApproximationPair {
  RationalVector v_minus;
  RationalVector v_plus;
};

/// Facet-defining inequalities on the sorted spectrum. Coefficients are
/// coprime integers with positive leading entry; bounds are exact rationals.
struct HalfspaceSystem {
  std::vector<Halfspace> inequalities;
  bool includes_ordering = false;
};

struct SupportMinimum {
  Rational value;
  RationalVector argmin;
};

VertexSet generating_vertices(int num_fermions, int num_orbitals, const WeightVector& w);

/// Exact membership of a spectrum in the polytope spanned by the vertex set:
/// feasibility of simplex coefficients whose mixed vertex majorizes the
/// sorted spectrum. The spectrum must sum to n.
MembershipCertificate membership(const RationalVector& lambda, const VertexSet& vs);

/// Exact minimum of <h, lambda> over the polytope; h must be non-decreasing.
/// By rearrangement the optimum pairs ascending levels with a decreasing
/// vertex, so it is the best vertex against h as given.
SupportMinimum support_minimum(const OneParticleSpectrum& h, const VertexSet& vs);

ApproximationPair inner_outer(const VertexSet& vs);

/**
 * Minimal facet system of the sorted polytope (polytope intersected with the
 * ordered Pauli simplex), split into ordering facets (dropped) and exclusion
 * facets (returned). Exact double description on the permutation orbit of
 * the vertices, dimension-reduced through the normalization hyperplane.
 * Requires pairwise distinct weights and d - 1 <= 6.
 */
HalfspaceSystem facets(const VertexSet& vs);

/// Whether the polytope of w_small is contained in the polytope of w_big at
/// the given instance; cross-checked against weight majorization.
bool polytope_inclusion(const WeightVector& w_small, const WeightVector& w_big, int num_fermions,
                        int num_orbitals);

/// Canonical representative of a halfspace on the hyperplane sum(x) = total:
/// last coefficient shifted to zero, coefficients scaled to coprime integers.
Halfspace canonical_halfspace(const Halfspace& h, int dim, const Rational& total);

}  // namespace exclusionpoly
