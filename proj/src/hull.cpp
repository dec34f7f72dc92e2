#include "exclusionpoly/hull.hpp"

#include <algorithm>
#include <cstdint>

#include "exclusionpoly/errors.hpp"

namespace exclusionpoly {

namespace {

using IntVector = std::vector<mpz_class>;

// Rescale to a primitive integer vector (clear denominators, divide by gcd).
IntVector to_primitive(const RationalVector& v) {
  mpz_class lcm_den(1);
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
  IntVector out(v.size());
  mpz_class gcd_all(0);
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].num() * (lcm_den / v[i].den());
    mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), out[i].get_mpz_t());
  }
  if (gcd_all > 1)
    for (auto& x : out) x /= gcd_all;
  return out;
}

void reduce_content(IntVector& v) {
  mpz_class g(0);
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) x /= g;
}

mpz_class idot(const IntVector& a, const IntVector& b) {
  mpz_class s(0);
  for (size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

using Bitset = std::vector<uint64_t>;

struct Ray {
  IntVector vec;
  Bitset tight;  // processed rows this ray saturates
};

void set_bit(Bitset& b, size_t i) { b[i >> 6] |= uint64_t(1) << (i & 63); }

int popcount_and(const Bitset& a, const Bitset& b) {
  int c = 0;
  for (size_t w = 0; w < a.size(); ++w) c += __builtin_popcountll(a[w] & b[w]);
  return c;
}

bool and_subset_of(const Bitset& a, const Bitset& b, const Bitset& super) {
  for (size_t w = 0; w < a.size(); ++w)
    if ((a[w] & b[w]) & ~super[w]) return false;
  return true;
}

// Gauss-Jordan inverse; returns false on singularity.
bool invert(RationalMatrix m, RationalMatrix& inv) {
  const size_t n = m.size();
  inv.assign(n, RationalVector(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    const Rational p = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return true;
}

// Greedily pick rows (in order) forming a basis of R^dim.
std::vector<int> independent_rows(const std::vector<RationalVector>& rows, int dim) {
  std::vector<int> picked;
  RationalMatrix reduced;
  for (size_t i = 0; i < rows.size() && static_cast<int>(picked.size()) < dim; ++i) {
    RationalVector cand = rows[i];
    for (const auto& row : reduced) {
      int lead = 0;
      while (row[lead].is_zero()) ++lead;
      if (!cand[lead].is_zero()) {
        const Rational f = cand[lead];
        for (int j = 0; j < dim; ++j) cand[j] -= f * row[j];
      }
    }
    int lead = 0;
    while (lead < dim && cand[lead].is_zero()) ++lead;
    if (lead == dim) continue;
    const Rational p = cand[lead];
    for (int j = 0; j < dim; ++j) cand[j] /= p;
    reduced.push_back(std::move(cand));
    std::sort(reduced.begin(), reduced.end(), [](const RationalVector& a, const RationalVector& b) {
      int la = 0, lb = 0;
      while (a[la].is_zero()) ++la;
      while (b[lb].is_zero()) ++lb;
      return la < lb;
    });
    picked.push_back(static_cast<int>(i));
  }
  return picked;
}

}  // namespace

std::vector<RationalVector> cone_extreme_rays(const std::vector<RationalVector>& input_rows, int dim) {
  for (const auto& r : input_rows)
    if (static_cast<int>(r.size()) != dim) throw StructuralError("cone row dimension mismatch");

  const std::vector<int> basis = independent_rows(input_rows, dim);
  if (static_cast<int>(basis.size()) < dim)
    throw StructuralError("cone description does not span; cone is not pointed");

  RationalMatrix b(dim, RationalVector(dim));
  for (int i = 0; i < dim; ++i) b[i] = input_rows[basis[i]];
  RationalMatrix binv;
  if (!invert(b, binv)) throw StructuralError("cone basis inversion failed");

  // all arithmetic below runs on primitive integer vectors; rows may be
  // rescaled freely since the cone only sees their signs
  std::vector<IntVector> rows;
  rows.reserve(input_rows.size());
  for (const auto& r : input_rows) rows.push_back(to_primitive(r));

  const size_t total_rows = rows.size();
  const size_t words = (total_rows + 63) / 64;

  std::vector<bool> is_basis_row(total_rows, false);
  for (int i : basis) is_basis_row[i] = true;

  // initial simplicial cone from the basis rows: ray j satisfies
  // basis_row_i . ray_j = -delta_ij
  std::vector<Ray> rays;
  for (int j = 0; j < dim; ++j) {
    RationalVector col(dim);
    for (int i = 0; i < dim; ++i) col[i] = -binv[i][j];
    Ray ray;
    ray.vec = to_primitive(col);
    ray.tight.assign(words, 0);
    for (int i = 0; i < dim; ++i)
      if (i != j) set_bit(ray.tight, basis[i]);
    rays.push_back(std::move(ray));
  }

  std::vector<size_t> processed;
  for (int i : basis) processed.push_back(i);

  for (size_t row_idx = 0; row_idx < total_rows; ++row_idx) {
    if (is_basis_row[row_idx]) continue;
    const IntVector& a = rows[row_idx];

    std::vector<mpz_class> value(rays.size());
    std::vector<int> sign(rays.size());
    bool any_positive = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      value[i] = idot(a, rays[i].vec);
      sign[i] = sgn(value[i]);
      if (sign[i] > 0) any_positive = true;
    }
    if (!any_positive) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (sign[i] == 0) set_bit(rays[i].tight, row_idx);
      processed.push_back(row_idx);
      continue;
    }

    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (sign[i] > 0) continue;
      if (sign[i] == 0) set_bit(rays[i].tight, row_idx);
      next.push_back(rays[i]);
    }

    for (size_t in = 0; in < rays.size(); ++in) {
      if (sign[in] >= 0) continue;
      for (size_t out = 0; out < rays.size(); ++out) {
        if (sign[out] <= 0) continue;
        // combinatorial adjacency: no third ray saturates everything the
        // pair saturates in common
        const int common = popcount_and(rays[in].tight, rays[out].tight);
        if (common < dim - 2) continue;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size(); ++k) {
          if (k == in || k == out) continue;
          if (and_subset_of(rays[in].tight, rays[out].tight, rays[k].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;

        Ray fresh;
        fresh.vec.resize(dim);
        for (int j = 0; j < dim; ++j)
          fresh.vec[j] = value[out] * rays[in].vec[j] - value[in] * rays[out].vec[j];
        reduce_content(fresh.vec);
        fresh.tight.assign(words, 0);
        for (size_t p : processed)
          if (idot(rows[p], fresh.vec) == 0) set_bit(fresh.tight, p);
        set_bit(fresh.tight, row_idx);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
    processed.push_back(row_idx);
  }

  std::vector<RationalVector> out;
  out.reserve(rays.size());
  for (const auto& r : rays) {
    RationalVector v(dim);
    for (int j = 0; j < dim; ++j) v[j] = Rational(r.vec[j], mpz_class(1));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RationalVector> enumerate_polytope_vertices(const std::vector<Halfspace>& halfspaces,
                                                        int dim) {
  std::vector<RationalVector> rows;
  rows.reserve(halfspaces.size() + 1);
  for (const auto& h : halfspaces) {
    if (static_cast<int>(h.coeffs.size()) != dim) throw StructuralError("halfspace dimension mismatch");
    RationalVector row = h.coeffs;
    row.push_back(-h.bound);
    rows.push_back(std::move(row));
  }
  RationalVector last(dim + 1);
  last[dim] = -1;  // homogenization coordinate stays nonnegative
  rows.push_back(std::move(last));

  std::vector<RationalVector> vertices;
  for (const RationalVector& ray : cone_extreme_rays(rows, dim + 1)) {
    const Rational& t = ray[dim];
    if (t.is_zero()) throw DomainError("polyhedron is unbounded; no vertex enumeration");
    RationalVector v(dim);
    for (int j = 0; j < dim; ++j) v[j] = ray[j] / t;
    vertices.push_back(std::move(v));
  }
  return vertices;
}

std::vector<Halfspace> convex_hull_facets(const std::vector<RationalVector>& points, int dim,
                                          const RationalVector& interior_point) {
  if (points.empty()) throw StructuralError("convex_hull_facets on empty point set");
  if (affine_dimension(points) != dim)
    throw DomainError("convex_hull_facets requires a full-dimensional point set");

  // polar dual around the interior point: vertices of
  // {y | (p - c) . y <= 1 for all p} are the facets of conv(points)
  std::vector<Halfspace> polar;
  polar.reserve(points.size());
  for (const auto& p : points) {
    RationalVector shifted(dim);
    for (int j = 0; j < dim; ++j) shifted[j] = p[j] - interior_point[j];
    polar.push_back({std::move(shifted), Rational(1)});
  }
  std::vector<Halfspace> facets;
  for (RationalVector& y : enumerate_polytope_vertices(polar, dim)) {
    const Rational bound = Rational(1) + dot(y, interior_point);
    facets.push_back({std::move(y), bound});
  }
  return facets;
}

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  const size_t dim = points.front().size();
  RationalMatrix reduced;
  for (size_t i = 1; i < points.size(); ++i) {
    RationalVector cand(dim);
    for (size_t j = 0; j < dim; ++j) cand[j] = points[i][j] - points[0][j];
    for (const auto& row : reduced) {
      size_t lead = 0;
      while (row[lead].is_zero()) ++lead;
      if (!cand[lead].is_zero()) {
        const Rational f = cand[lead];
        for (size_t j = 0; j < dim; ++j) cand[j] -= f * row[j];
      }
    }
    size_t lead = 0;
    while (lead < dim && cand[lead].is_zero()) ++lead;
    if (lead == dim) continue;
    const Rational p = cand[lead];
    for (size_t j = 0; j < dim; ++j) cand[j] /= p;
    reduced.push_back(std::move(cand));
    std::sort(reduced.begin(), reduced.end(), [](const RationalVector& a, const RationalVector& b) {
      size_t la = 0, lb = 0;
      while (a[la].is_zero()) ++la;
      while (b[lb].is_zero()) ++lb;
      return la < lb;
    });
    if (reduced.size() == dim) break;
  }
  return static_cast<int>(reduced.size());
}

}  // namespace exclusionpoly
