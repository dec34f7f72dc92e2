#include <doctest.h>

#include <algorithm>

#include "exclusionpoly/errors.hpp"
#include "exclusionpoly/hull.hpp"
#include "exclusionpoly/linprog.hpp"
#include "exclusionpoly/sampling.hpp"

using namespace exclusionpoly;

namespace {

LinearConstraint row(RationalVector coeffs, Rational rhs) { return {std::move(coeffs), std::move(rhs)}; }

// Independent oracle: minimum of <h, pi(v)> over all coordinate permutations.
Rational permutation_min_inner_product(RationalVector v, const RationalVector& h) {
  std::sort(v.begin(), v.end());
  Rational best = dot(v, h);
  while (std::next_permutation(v.begin(), v.end())) best = std::min(best, dot(v, h));
  return best;
}

// Majorization feasibility system of a single-vertex polytope: p lives on a
// one-point simplex, so the constraints reduce to prefix-sum comparisons.
LinearProgram single_vertex_membership_lp(const RationalVector& lambda, const RationalVector& v) {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.nonnegative = {true};
  lp.equalities.push_back(row({Rational(1)}, Rational(1)));
  Rational lam_prefix, vert_prefix;
  for (size_t k = 0; k + 1 < lambda.size(); ++k) {
    lam_prefix += lambda[k];
    vert_prefix += v[k];
    lp.inequalities.push_back(row({-vert_prefix}, -lam_prefix));
  }
  return lp;
}

void check_witness_satisfies(const LinearProgram& lp, const RationalVector& x) {
  for (const auto& c : lp.equalities) CHECK(dot(c.coeffs, x) == c.rhs);
  for (const auto& c : lp.inequalities) CHECK(dot(c.coeffs, x) <= c.rhs);
  if (!lp.nonnegative.empty())
    for (int j = 0; j < lp.num_vars; ++j)
      if (lp.nonnegative[j]) CHECK(x[j].sign() >= 0);
}

void check_farkas(const LinearProgram& lp, const FarkasCertificate& cert) {
  RationalVector combo(lp.num_vars);
  Rational rhs;
  for (size_t i = 0; i < lp.equalities.size(); ++i) {
    for (int j = 0; j < lp.num_vars; ++j) combo[j] += cert.eq_multipliers[i] * lp.equalities[i].coeffs[j];
    rhs += cert.eq_multipliers[i] * lp.equalities[i].rhs;
  }
  for (size_t i = 0; i < lp.inequalities.size(); ++i) {
    CHECK(cert.leq_multipliers[i].sign() >= 0);
    for (int j = 0; j < lp.num_vars; ++j)
      combo[j] += cert.leq_multipliers[i] * lp.inequalities[i].coeffs[j];
    rhs += cert.leq_multipliers[i] * lp.inequalities[i].rhs;
  }
  // sign-restricted variables may keep a nonnegative residual coefficient
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!lp.nonnegative.empty() && lp.nonnegative[j])
      CHECK(combo[j].sign() >= 0);
    else
      CHECK(combo[j].is_zero());
  }
  CHECK(rhs.sign() < 0);
}

}  // namespace

TEST_CASE("feasibility of a unit box") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.inequalities.push_back(row({Rational(-1)}, Rational(0)));  // x >= 0
  lp.inequalities.push_back(row({Rational(1)}, Rational(1)));   // x <= 1
  const FeasibilityResult fr = lp_feasible(lp);
  REQUIRE(fr.feasible);
  CHECK(fr.witness[0] == Rational(0));
  check_witness_satisfies(lp, fr.witness);
}

TEST_CASE("infeasible box yields a verifiable certificate") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.inequalities.push_back(row({Rational(1)}, Rational(0)));    // x <= 0
  lp.inequalities.push_back(row({Rational(-1)}, Rational(-1)));  // x >= 1
  const FeasibilityResult fr = lp_feasible(lp);
  REQUIRE(!fr.feasible);
  REQUIRE(fr.certificate.has_value());
  check_farkas(lp, *fr.certificate);
}

TEST_CASE("single-vertex majorization system accepts the vertex itself") {
  const RationalVector v = parse_rational_list("9/10,3/5,1/2");
  const LinearProgram lp = single_vertex_membership_lp(v, v);
  const FeasibilityResult fr = lp_feasible(lp);
  REQUIRE(fr.feasible);
  CHECK(fr.witness == RationalVector{Rational(1)});
}

TEST_CASE("minimize on a segment") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = RationalVector{Rational(1)};
  lp.inequalities.push_back(row({Rational(-1)}, Rational(0)));
  lp.inequalities.push_back(row({Rational(1)}, Rational(1)));
  const OptimizationResult opt = lp_minimize(lp);
  CHECK(opt.value == Rational(0));
  CHECK(opt.minimizer[0] == Rational(0));
}

TEST_CASE("objective constant on the feasible set") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.nonnegative = {true, true};
  lp.objective = RationalVector{Rational(1), Rational(1)};
  lp.equalities.push_back(row({Rational(1), Rational(1)}, Rational(2)));
  const OptimizationResult opt = lp_minimize(lp);
  CHECK(opt.value == Rational(2));
  CHECK(opt.minimizer[0] + opt.minimizer[1] == Rational(2));
}

TEST_CASE("minimum of <h, x> over a permutohedron") {
  // mixtures of the six permutations of v = (9/10, 3/5, 1/2); the oracle
  // enumerates the permutations directly
  const RationalVector v = parse_rational_list("9/10,3/5,1/2");
  const RationalVector h = parse_rational_list("1,2,3");

  RationalVector perm = v;
  std::sort(perm.begin(), perm.end());
  std::vector<RationalVector> corners;
  do corners.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(corners.size() == 6);

  LinearProgram lp;
  lp.num_vars = static_cast<int>(corners.size());
  lp.nonnegative.assign(lp.num_vars, true);
  lp.equalities.push_back(row(RationalVector(lp.num_vars, Rational(1)), Rational(1)));
  RationalVector costs(lp.num_vars);
  for (size_t i = 0; i < corners.size(); ++i) costs[i] = dot(corners[i], h);
  lp.objective = costs;

  const OptimizationResult opt = lp_minimize(lp);
  const Rational oracle = permutation_min_inner_product(v, h);
  CHECK(oracle == Rational(18, 5));
  CHECK(opt.value == oracle);
}

TEST_CASE("unbounded and infeasible throw") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = RationalVector{Rational(1)};
  CHECK_THROWS_AS(lp_minimize(lp), LpUnboundedError);

  lp.inequalities.push_back(row({Rational(1)}, Rational(-1)));
  lp.inequalities.push_back(row({Rational(-1)}, Rational(-1)));
  CHECK_THROWS_AS(lp_minimize(lp), LpInfeasibleError);
}

TEST_CASE("malformed dimensions rejected") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.inequalities.push_back(row({Rational(1)}, Rational(0)));
  CHECK_THROWS_AS(lp_feasible(lp), StructuralError);
}

TEST_CASE("optimum matches the minimum over enumerated vertices") {
  // cross-check harness: on random bounded polytopes the simplex optimum
  // must equal the best value over the full vertex enumeration
  Sampler sampler(20240818);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(sampler.below(2));
    LinearProgram lp;
    lp.num_vars = n;
    std::vector<Halfspace> halfspaces;
    for (int j = 0; j < n; ++j) {  // a box keeps everything bounded
      RationalVector lo(n), hi(n);
      lo[j] = -1;
      hi[j] = 1;
      lp.inequalities.push_back({lo, Rational(0)});
      lp.inequalities.push_back({hi, Rational(2)});
    }
    for (int extra = 0; extra < 3; ++extra) {
      RationalVector coeffs(n);
      for (int j = 0; j < n; ++j) coeffs[j] = Rational(sampler.below(7) - 3);
      lp.inequalities.push_back({coeffs, Rational(1 + sampler.below(4))});
    }
    for (const auto& c : lp.inequalities) halfspaces.push_back({c.coeffs, c.rhs});
    RationalVector objective(n);
    for (int j = 0; j < n; ++j) objective[j] = Rational(sampler.below(9) - 4);
    lp.objective = objective;

    const OptimizationResult opt = lp_minimize(lp);
    const auto vertices = enumerate_polytope_vertices(halfspaces, n);
    REQUIRE(!vertices.empty());
    Rational best = dot(objective, vertices[0]);
    for (const auto& v : vertices) best = std::min(best, dot(objective, v));
    CHECK(opt.value == best);
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("determinism and exact witnesses on random programs") {
  Sampler sampler(20240817);
  int feasible_count = 0, infeasible_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(sampler.below(3));
    const int m = 1 + static_cast<int>(sampler.below(5));
    LinearProgram lp;
    lp.num_vars = n;
    lp.nonnegative.assign(n, false);
    for (int j = 0; j < n; ++j) lp.nonnegative[j] = sampler.below(2) == 0;
    for (int i = 0; i < m; ++i) {
      RationalVector coeffs(n);
      for (int j = 0; j < n; ++j) coeffs[j] = Rational(sampler.below(11) - 5);
      lp.inequalities.push_back(row(std::move(coeffs), Rational(sampler.below(9) - 4)));
    }
    const FeasibilityResult first = lp_feasible(lp);
    const FeasibilityResult second = lp_feasible(lp);
    CHECK(first.feasible == second.feasible);
    if (first.feasible) {
      ++feasible_count;
      CHECK(first.witness == second.witness);
      check_witness_satisfies(lp, first.witness);
    } else {
      ++infeasible_count;
      check_farkas(lp, *first.certificate);
    }
  }
  CHECK(feasible_count > 0);
  CHECK(infeasible_count > 0);
}
