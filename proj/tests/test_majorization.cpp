#include <doctest.h>

#include "exclusionpoly/errors.hpp"
#include "exclusionpoly/majorization.hpp"
#include "exclusionpoly/sampling.hpp"

using namespace exclusionpoly;

namespace {

RationalVector rv(const char* text) { return parse_rational_list(text); }

RationalVector matrix_times(const RationalMatrix& m, const RationalVector& x) {
  RationalVector out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], x);
  return out;
}

}  // namespace

TEST_CASE("sort_desc") {
  CHECK(sort_desc(rv("1,3,2")) == rv("3,2,1"));
  CHECK(sort_desc(rv("0,0,0")) == rv("0,0,0"));
  CHECK(sort_desc(rv("1/2,2/5,1/10")) == rv("1/2,2/5,1/10"));
}

TEST_CASE("majorizes") {
  CHECK(majorizes(rv("1/2,1/2"), rv("1,0")));
  CHECK(majorizes(rv("2/3,2/3,2/3"), rv("9/10,3/5,1/2")));
  CHECK(!majorizes(rv("1,0"), rv("3/5,2/5")));
  CHECK(!majorizes(rv("1/2,1/2"), rv("1/2,1/4")));  // totals differ
  CHECK_THROWS_AS(majorizes(rv("1,0"), rv("1,0,0")), StructuralError);
}

TEST_CASE("schur_horn_check") {
  CHECK(schur_horn_check(rv("1/2,1/2"), rv("3/5,2/5")));
  CHECK(schur_horn_check(rv("3/5,2/5"), rv("3/5,2/5")));
  CHECK(!schur_horn_check(rv("1,0"), rv("1/2,1/2")));
}

TEST_CASE("hlp_transfer on the spec cases") {
  SUBCASE("identity when equal") {
    const RationalMatrix m = hlp_transfer(rv("2/5,3/5"), rv("3/5,2/5"));
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j) CHECK(m[i][j] == Rational(i == j ? 1 : 0));
  }
  SUBCASE("single transfer") {
    const RationalMatrix m = hlp_transfer(rv("3/5,2/5"), rv("1,0"));
    CHECK(m[0][0] == Rational(3, 5));
    CHECK(m[0][1] == Rational(2, 5));
    CHECK(m[1][0] == Rational(2, 5));
    CHECK(m[1][1] == Rational(3, 5));
    CHECK(matrix_times(m, rv("1,0")) == rv("3/5,2/5"));
  }
  SUBCASE("re-substitution on a three-coordinate pair") {
    const RationalVector v = rv("2/3,2/3,2/3"), w = rv("1,1,0");
    const RationalMatrix m = hlp_transfer(v, w);
    CHECK(is_doubly_stochastic(m));
    CHECK(matrix_times(m, sort_desc(w)) == sort_desc(v));
  }
  SUBCASE("precondition enforced") {
    CHECK_THROWS_AS(hlp_transfer(rv("1,0"), rv("1/2,1/2")), MajorizationError);
  }
}

TEST_CASE("birkhoff_decompose on the spec cases") {
  SUBCASE("identity matrix") {
    RationalMatrix id(3, RationalVector(3));
    for (int i = 0; i < 3; ++i) id[i][i] = 1;
    const PermutationCombination c = birkhoff_decompose(id);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].weight == Rational(1));
    CHECK(c.terms[0].perm == Permutation{0, 1, 2});
  }
  SUBCASE("two-by-two mix") {
    RationalMatrix m{rv("7/10,3/10"), rv("3/10,7/10")};
    const PermutationCombination c = birkhoff_decompose(m);
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms[0].weight == Rational(7, 10));
    CHECK(c.terms[0].perm == Permutation{0, 1});
    CHECK(c.terms[1].weight == Rational(3, 10));
    CHECK(c.terms[1].perm == Permutation{1, 0});
    CHECK(c.to_matrix() == m);
  }
  SUBCASE("uniform three-by-three") {
    RationalMatrix m(3, RationalVector(3, Rational(1, 3)));
    const PermutationCombination c = birkhoff_decompose(m);
    CHECK(c.terms.size() == 3);
    for (const auto& t : c.terms) CHECK(t.weight == Rational(1, 3));
    CHECK(c.to_matrix() == m);
  }
  SUBCASE("rejects non-doubly-stochastic input") {
    RationalMatrix bad{rv("1,1"), rv("0,0")};
    CHECK_THROWS_AS(birkhoff_decompose(bad), StructuralError);
  }
}

TEST_CASE("majorization pre-order on random triples") {
  Sampler sampler(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(sampler.below(6));
    RationalVector w(d);
    for (int i = 0; i < d; ++i) w[i] = sampler.unit_rational();
    const RationalVector v = sampler.majorized_below(w, 3);
    const RationalVector u = sampler.majorized_below(v, 3);
    CHECK(majorizes(w, w));  // reflexive
    CHECK(majorizes(v, w));
    CHECK(majorizes(u, v));
    CHECK(majorizes(u, w));  // transitive along the constructed chain
  }
}

TEST_CASE("hlp transfer round-trip on random pairs") {
  Sampler sampler(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(sampler.below(7));
    RationalVector w(d);
    for (int i = 0; i < d; ++i) w[i] = sampler.unit_rational();
    const RationalVector v = sampler.majorized_below(w, 1 + static_cast<int>(sampler.below(4)));
    const RationalMatrix m = hlp_transfer(v, w);
    CHECK(is_doubly_stochastic(m));
    CHECK(matrix_times(m, sort_desc(w)) == sort_desc(v));
  }
}

TEST_CASE("birkhoff round-trip, term bound, and composition") {
  Sampler sampler(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(sampler.below(5));
    RationalVector w(d);
    for (int i = 0; i < d; ++i) w[i] = sampler.unit_rational();
    const RationalVector v = sampler.majorized_below(w, 2);
    const RationalMatrix m = hlp_transfer(v, w);

    const PermutationCombination c = birkhoff_decompose(m);
    CHECK(c.to_matrix() == m);
    CHECK(c.terms.size() <= static_cast<size_t>((d - 1) * (d - 1) + 1));
    Rational total;
    for (const auto& t : c.terms) {
      CHECK(t.weight.sign() > 0);
      total += t.weight;
    }
    CHECK(total == Rational(1));
    for (size_t a = 0; a < c.terms.size(); ++a)
      for (size_t b = a + 1; b < c.terms.size(); ++b) CHECK(c.terms[a].perm != c.terms[b].perm);

    // combined constructive content: the decomposition of the transfer
    // matrix expresses sort_desc(v) as a convex mix of permutations of w
    CHECK(c.apply(sort_desc(w)) == sort_desc(v));
  }
}
