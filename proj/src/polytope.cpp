#include "exclusionpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exclusionpoly/errors.hpp"
#include "exclusionpoly/majorization.hpp"

namespace exclusionpoly {

WeightVector::WeightVector(RationalVector w) : weights(std::move(w)) {
  if (weights.empty()) throw StructuralError("weight vector must be nonempty");
  for (size_t j = 0; j + 1 < weights.size(); ++j)
    if (weights[j] < weights[j + 1]) throw StructuralError("weights must be non-increasing");
  if (weights.back().sign() < 0) throw StructuralError("weights must be nonnegative");
  if (sum(weights) != Rational(1)) throw StructuralError("weights must sum to one");
  r = 0;
  for (const auto& x : weights)
    if (x.sign() > 0) ++r;
  if (r == 0) throw StructuralError("weight vector needs a positive entry");
}

Rational WeightVector::at(int j) const {
  if (j < 1) throw StructuralError("weight index is 1-based");
  if (j > static_cast<int>(weights.size())) return Rational(0);
  return weights[j - 1];
}

WeightVector WeightVector::generic(int r) {
  if (r < 1) throw DomainError("generic weights need r >= 1");
  std::vector<long> primes;
  for (long p = 2; static_cast<int>(primes.size()) < r; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) { prime = false; break; }
    if (prime) primes.push_back(p);
  }
  Rational total;
  for (long p : primes) total += Rational(p);
  RationalVector w(r);
  for (int j = 0; j < r; ++j) w[j] = Rational(primes[r - 1 - j]) / total;
  return WeightVector(w);
}

VertexSet generating_vertices(int num_fermions, int num_orbitals, const WeightVector& w) {
  if (binomial(num_orbitals, num_fermions) < w.r)
    throw DomainError("generating_vertices: more nonzero weights than configurations");

  VertexSet vs;
  vs.n = num_fermions;
  vs.d = num_orbitals;
  vs.weight = w;

  std::map<RationalVector, size_t> seen;
  for (Lineup& lineup : enumerate_lineups(num_fermions, num_orbitals, w.r)) {
    RationalVector v(num_orbitals);
    for (int j = 0; j < w.r; ++j) {
      const OccupationVector bits = occupation_vector(lineup.sequence[j], num_orbitals);
      const Rational& wj = w.weights[j];
      for (int i = 0; i < num_orbitals; ++i)
        if (bits[i]) v[i] += wj;
    }
    for (int i = 0; i + 1 < num_orbitals; ++i)
      if (v[i] < v[i + 1]) throw std::logic_error("generating vertex came out unsorted");
    if (sum(v) != Rational(num_fermions)) throw std::logic_error("generating vertex sum mismatch");

    if (auto it = seen.find(v); it != seen.end()) {
      vs.merged_duplicates = true;
      continue;
    }
    seen.emplace(v, vs.vertices.size());
    vs.vertices.push_back(std::move(v));
    vs.provenance.push_back(std::move(lineup));
  }

  // For pairwise distinct positive weights, distinct lineups must give
  // distinct vertices; a merge would mean the enumeration is inconsistent.
  bool generic = true;
  for (int j = 1; j < w.r; ++j)
    if (w.at(j) == w.at(j + 1)) generic = false;
  if (generic && vs.merged_duplicates)
    throw std::logic_error("distinct lineups collided on one vertex at generic weights");
  return vs;
}

namespace {

RationalVector prefix_sums(const RationalVector& v) {
  RationalVector p(v.size());
  Rational acc;
  for (size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    p[i] = acc;
  }
  return p;
}

}  // namespace

MembershipCertificate membership(const RationalVector& lambda, const VertexSet& vs) {
  if (static_cast<int>(lambda.size()) != vs.d) throw DomainError("membership: spectrum length mismatch");
  if (sum(lambda) != Rational(vs.n)) throw DomainError("membership: spectrum must sum to n");

  const RationalVector sorted = sort_desc(lambda);
  const RationalVector lam_prefix = prefix_sums(sorted);
  std::vector<RationalVector> vert_prefix;
  vert_prefix.reserve(vs.vertices.size());
  for (const auto& v : vs.vertices) vert_prefix.push_back(prefix_sums(v));

  const int R = static_cast<int>(vs.vertices.size());
  const int d = vs.d;

  MembershipCertificate cert;

  // A single prefix index violated by every vertex rules out all mixtures at
  // once; report the most violated such index when one exists.
  {
    int worst_k = 0;
    Rational worst_gap;
    for (int k = 1; k < d; ++k) {
      Rational best = vert_prefix[0][k - 1];
      for (int j = 1; j < R; ++j) best = std::max(best, vert_prefix[j][k - 1]);
      const Rational gap = lam_prefix[k - 1] - best;
      if (gap.sign() > 0 && (worst_k == 0 || worst_gap < gap)) {
        worst_k = k;
        worst_gap = gap;
      }
    }
    if (worst_k > 0) {
      cert.inside = false;
      cert.violated_prefix = worst_k;
      return cert;
    }
  }

  // Feasibility over simplex coefficients p: mixed prefix sums dominate the
  // sorted spectrum's prefix sums (equality at k = d holds automatically).
  LinearProgram lp;
  lp.num_vars = R;
  lp.nonnegative.assign(R, true);
  lp.equalities.push_back({RationalVector(R, Rational(1)), Rational(1)});
  for (int k = 1; k < d; ++k) {
    RationalVector row(R);
    for (int j = 0; j < R; ++j) row[j] = -vert_prefix[j][k - 1];
    lp.inequalities.push_back({std::move(row), -lam_prefix[k - 1]});
  }

  const FeasibilityResult fr = lp_feasible(lp);
  if (fr.feasible) {
    cert.inside = true;
    cert.simplex_coefficients = fr.witness;
  } else {
    cert.inside = false;
    cert.lp_certificate = fr.certificate;
    // heaviest prefix multiplier in the infeasibility certificate
    int best_k = 1;
    Rational best_mult(-1);
    for (int k = 1; k < d; ++k) {
      const Rational& m = fr.certificate->leq_multipliers[k - 1];
      if (m > best_mult) {
        best_mult = m;
        best_k = k;
      }
    }
    cert.violated_prefix = best_k;
  }
  return cert;
}

SupportMinimum support_minimum(const OneParticleSpectrum& h, const VertexSet& vs) {
  if (h.dimension() != vs.d) throw StructuralError("support_minimum: spectrum length mismatch");
  if (vs.vertices.empty()) throw StructuralError("support_minimum: empty vertex set");
  SupportMinimum best{dot(h.levels, vs.vertices[0]), vs.vertices[0]};
  for (size_t j = 1; j < vs.vertices.size(); ++j) {
    const Rational val = dot(h.levels, vs.vertices[j]);
    if (val < best.value) best = {val, vs.vertices[j]};
  }
  return best;
}

ApproximationPair inner_outer(const VertexSet& vs) {
  if (vs.vertices.empty()) throw StructuralError("inner_outer: empty vertex set");
  const int d = vs.d;
  RationalVector lo = prefix_sums(vs.vertices[0]);
  RationalVector hi = lo;
  for (size_t j = 1; j < vs.vertices.size(); ++j) {
    const RationalVector p = prefix_sums(vs.vertices[j]);
    for (int k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  ApproximationPair pair;
  pair.v_minus.resize(d);
  pair.v_plus.resize(d);
  for (int k = 0; k < d; ++k) {
    pair.v_minus[k] = lo[k] - (k ? lo[k - 1] : Rational(0));
    pair.v_plus[k] = hi[k] - (k ? hi[k - 1] : Rational(0));
  }
  // prefix minima of decreasing vectors stay concave, so v_minus is sorted
  for (int k = 0; k + 1 < d; ++k)
    if (pair.v_minus[k] < pair.v_minus[k + 1])
      throw std::logic_error("inner generator came out unsorted");

  // closed form of the outer generator on generic-size instances
  const int r = vs.weight.r;
  if (vs.n >= r - 1 && vs.d - vs.n >= r - 1) {
    RationalVector expected(d);
    for (int i = 0; i < vs.n - 1; ++i) expected[i] = 1;
    expected[vs.n - 1] = vs.weight.at(1);
    if (vs.n < d) expected[vs.n] = Rational(1) - vs.weight.at(1);
    if (pair.v_plus != expected)
      throw std::logic_error("outer generator disagrees with its closed form");
  }
  return pair;
}

Halfspace canonical_halfspace(const Halfspace& h, int dim, const Rational& total) {
  if (static_cast<int>(h.coeffs.size()) != dim) throw StructuralError("canonical_halfspace dimension mismatch");
  Halfspace out = h;
  const Rational shift = out.coeffs[dim - 1];
  if (!shift.is_zero()) {
    for (auto& c : out.coeffs) c -= shift;
    out.bound -= shift * total;
  }
  // positive scale to coprime integer coefficients
  mpz_class lcm_den(1);
  for (const auto& c : out.coeffs)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  mpz_class gcd_num(0);
  for (const auto& c : out.coeffs) {
    mpz_class scaled = c.num() * (lcm_den / c.den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  if (gcd_num != 0) {
    const Rational factor{lcm_den, gcd_num};
    for (auto& c : out.coeffs) c *= factor;
    out.bound *= factor;
  }
  return out;
}

namespace {

bool same_halfspace(const Halfspace& a, const Halfspace& b) {
  return a.coeffs == b.coeffs && a.bound == b.bound;
}

// Ordering halfspaces of the Pauli simplex in canonical full-coordinate
// form: lambda_k >= lambda_{k+1} for k < d and lambda_d >= 0.
std::vector<Halfspace> canonical_ordering_forms(int d, const Rational& total) {
  std::vector<Halfspace> forms;
  for (int k = 0; k + 1 < d; ++k) {
    Halfspace h;
    h.coeffs.assign(d, Rational(0));
    h.coeffs[k] = -1;
    h.coeffs[k + 1] = 1;
    h.bound = 0;
    forms.push_back(canonical_halfspace(h, d, total));
  }
  Halfspace last;
  last.coeffs.assign(d, Rational(0));
  last.coeffs[d - 1] = -1;
  last.bound = 0;
  forms.push_back(canonical_halfspace(last, d, total));
  return forms;
}

}  // namespace

HalfspaceSystem facets(const VertexSet& vs) {
  const int d = vs.d;
  const int n = vs.n;
  for (int j = 1; j < vs.weight.r; ++j)
    if (vs.weight.at(j) == vs.weight.at(j + 1))
      throw GenericityError("facets: weights must be pairwise distinct");
  if (d - 1 > 6) throw DomainError("facets: dimension d-1 exceeds the exact-hull limit of 6");
  if (n >= d) throw DomainError("facets: need n < d for a full-dimensional polytope");

  // all distinct coordinate permutations of every generating vertex,
  // reduced to the first d-1 coordinates via the normalization
  std::set<RationalVector> point_set;
  for (const auto& v : vs.vertices) {
    RationalVector p = v;
    std::sort(p.begin(), p.end());
    do {
      point_set.insert(RationalVector(p.begin(), p.end() - 1));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const std::vector<RationalVector> points(point_set.begin(), point_set.end());

  const int dim = d - 1;
  RationalVector center(dim, Rational(n) / Rational(d));

  // Pauli-simplex rows first in reduced coordinates: the vertex enumeration
  // below inserts rows in this order, and starting from the small simplex
  // keeps the intermediate double-description stages tiny.
  std::vector<Halfspace> candidates;
  for (int k = 0; k + 1 < dim; ++k) {
    Halfspace h;
    h.coeffs.assign(dim, Rational(0));
    h.coeffs[k] = -1;
    h.coeffs[k + 1] = 1;
    h.bound = 0;
    candidates.push_back(std::move(h));
  }
  {
    // lambda_{d-1} >= lambda_d with lambda_d eliminated
    Halfspace h;
    h.coeffs.assign(dim, Rational(-1));
    h.coeffs[dim - 1] = -2;
    h.bound = Rational(-n);
    candidates.push_back(std::move(h));
    // lambda_d >= 0
    Halfspace pos;
    pos.coeffs.assign(dim, Rational(1));
    pos.bound = Rational(n);
    candidates.push_back(std::move(pos));
    // lambda_1 <= 1
    Halfspace pauli;
    pauli.coeffs.assign(dim, Rational(0));
    pauli.coeffs[0] = 1;
    pauli.bound = Rational(1);
    candidates.push_back(std::move(pauli));
  }
  for (Halfspace& h : convex_hull_facets(points, dim, center)) candidates.push_back(std::move(h));

  // canonical dedup in full coordinates
  const Rational total(n);
  std::vector<Halfspace> canon;        // canonical full-space forms
  std::vector<Halfspace> reduced;      // matching reduced forms
  for (const auto& cand : candidates) {
    Halfspace full;
    full.coeffs = cand.coeffs;
    full.coeffs.push_back(Rational(0));
    full.bound = cand.bound;
    const Halfspace c = canonical_halfspace(full, d, total);
    bool dup = false;
    for (const auto& existing : canon)
      if (same_halfspace(existing, c)) { dup = true; break; }
    if (!dup) {
      canon.push_back(c);
      reduced.push_back(cand);
    }
  }

  // vertices of the sorted polytope, then keep candidates whose tight vertex
  // set spans a facet (affine dimension d-2)
  const std::vector<RationalVector> poly_vertices = enumerate_polytope_vertices(reduced, dim);
  if (affine_dimension(poly_vertices) != dim)
    throw DomainError("facets: sorted polytope is not full-dimensional");

  const std::vector<Halfspace> ordering = canonical_ordering_forms(d, total);
  Halfspace pauli_form;
  pauli_form.coeffs.assign(d, Rational(0));
  pauli_form.coeffs[0] = 1;
  pauli_form.bound = 1;
  pauli_form = canonical_halfspace(pauli_form, d, total);

  HalfspaceSystem out;
  out.includes_ordering = false;
  for (size_t i = 0; i < canon.size(); ++i) {
    std::vector<RationalVector> tight;
    for (const auto& v : poly_vertices)
      if (dot(reduced[i].coeffs, v) == reduced[i].bound) tight.push_back(v);
    if (affine_dimension(tight) != dim - 1) continue;  // not facet-defining

    // At (N,d) = (1,2) the Pauli bound and lambda_d >= 0 are the same
    // halfspace on the normalization hyperplane; the Pauli reading wins.
    bool is_ordering = !same_halfspace(canon[i], pauli_form);
    if (is_ordering) {
      is_ordering = false;
      for (const auto& o : ordering)
        if (same_halfspace(canon[i], o)) { is_ordering = true; break; }
    }
    if (is_ordering) continue;

    Rational lead;
    for (const auto& c : canon[i].coeffs)
      if (!c.is_zero()) { lead = c; break; }
    if (lead.sign() <= 0) throw std::logic_error("exclusion facet with nonpositive leading coefficient");
    out.inequalities.push_back(canon[i]);
  }

  // deterministic presentation: sort by coefficient vector, then bound
  std::sort(out.inequalities.begin(), out.inequalities.end(), [](const Halfspace& a, const Halfspace& b) {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.bound < b.bound;
  });
  return out;
}

bool polytope_inclusion(const WeightVector& w_small, const WeightVector& w_big, int num_fermions,
                        int num_orbitals) {
  const VertexSet small = generating_vertices(num_fermions, num_orbitals, w_small);
  const VertexSet big = generating_vertices(num_fermions, num_orbitals, w_big);

  bool included = true;
  for (const auto& v : small.vertices) {
    if (!membership(v, big).inside) {
      included = false;
      break;
    }
  }

  const size_t len = std::max(w_small.weights.size(), w_big.weights.size());
  RationalVector a(len), b(len);
  for (size_t i = 0; i < w_small.weights.size(); ++i) a[i] = w_small.weights[i];
  for (size_t i = 0; i < w_big.weights.size(); ++i) b[i] = w_big.weights[i];
  const bool weight_majorized = majorizes(a, b);

  if (included != weight_majorized)
    throw std::logic_error(
        "polytope inclusion disagrees with weight majorization; "
        "instance too small for the vertex criterion");
  return included;
}

}  // namespace exclusionpoly
