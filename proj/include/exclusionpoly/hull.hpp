#pragma once

#include <vector>

#include "exclusionpoly/rational.hpp"

namespace exclusionpoly {

/// Halfspace coeffs . x <= bound.
struct Halfspace {
  RationalVector coeffs;
  Rational bound;
};

/// Extreme rays of the pointed cone {z in R^dim | row . z <= 0 for all rows}.
/// Double description with the combinatorial adjacency test; deterministic
/// for a fixed row order. Throws if the rows do not span (cone not pointed).
std::vector<RationalVector> cone_extreme_rays(const std::vector<RationalVector>& rows, int dim);

/// Vertices of a bounded polyhedron {x | halfspaces} via homogenization.
/// Throws DomainError when a recession ray shows the set is unbounded.
std::vector<RationalVector> enumerate_polytope_vertices(const std::vector<Halfspace>& halfspaces,
                                                        int dim);

/// Facets of conv(points) for a full-dimensional point set, computed through
/// the polar dual around the given interior point.
std::vector<Halfspace> convex_hull_facets(const std::vector<RationalVector>& points, int dim,
                                          const RationalVector& interior_point);

/// Dimension of the affine span of the points (-1 for an empty set).
int affine_dimension(const std::vector<RationalVector>& points);

}  // namespace exclusionpoly
