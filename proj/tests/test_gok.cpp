#include <doctest.h>

#include "exclusionpoly/errors.hpp"
#include "exclusionpoly/gok.hpp"
#include "exclusionpoly/majorization.hpp"
#include "exclusionpoly/sampling.hpp"

using namespace exclusionpoly;

namespace {

RationalVector rv(const char* text) { return parse_rational_list(text); }
WeightVector wv(const char* text) { return WeightVector(parse_rational_list(text)); }

// Exact rational Givens-style rotation on coordinates (i, j):
// cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2). Applied to a diagonal matrix it
// mixes the two diagonal entries by sin^2 while keeping the trace.
RationalVector rotate_diagonal(RationalVector diag, size_t i, size_t j, const Rational& t) {
  const Rational t2 = t * t;
  const Rational denom = (Rational(1) + t2) * (Rational(1) + t2);
  const Rational s2 = Rational(4) * t2 / denom;  // sin^2
  const Rational c2 = Rational(1) - s2;
  const Rational di = diag[i], dj = diag[j];
  diag[i] = c2 * di + s2 * dj;
  diag[j] = s2 * di + c2 * dj;
  return diag;
}

}  // namespace

TEST_CASE("weighted energy on the hexagon instance") {
  const WeightVector w = wv("1/2,2/5,1/10");
  const OneParticleSpectrum h(rv("1,2,3"));
  const WeightedEnergyResult res = weighted_energy(h, w, 2);
  CHECK(res.value == Rational(18, 5));
  CHECK(res.minimizer_occupation == rv("9/10,3/5,1/2"));
  CHECK(!res.ties);
  REQUIRE(res.sorted_config_energies.size() == 3);
  CHECK(res.sorted_config_energies[0].first == Configuration{1, 2});
  CHECK(res.sorted_config_energies[0].second == Rational(3));
}

TEST_CASE("zero spectrum gives zero energy") {
  const OneParticleSpectrum h(RationalVector(6, Rational(0)));
  CHECK(weighted_energy(h, wv("1/2,1/2"), 3).value == Rational(0));
}

TEST_CASE("ground Slater determinant at full weight on the lowest state") {
  const OneParticleSpectrum h(rv("0,1,2,3,4,5"));
  const WeightedEnergyResult res = weighted_energy(h, wv("1"), 3);
  CHECK(res.value == Rational(3));
  CHECK(res.minimizer_occupation == rv("1,1,1,0,0,0"));
}

TEST_CASE("excitation gaps, two routes") {
  SUBCASE("simple ladder") {
    const GapResult res = excitation_gaps(OneParticleSpectrum(rv("1,2,3")), 2, 3);
    CHECK(res.gaps == RationalVector{Rational(1), Rational(2)});
    CHECK(!res.ties);
  }
  SUBCASE("degenerate levels flag the boundary tie") {
    const GapResult res = excitation_gaps(OneParticleSpectrum(rv("1,1,2")), 2, 2);
    // energies are {2, 3, 3}: the second and third states are degenerate
    CHECK(res.gaps == RationalVector{Rational(1)});
    CHECK(res.ties);
  }
  SUBCASE("gap vanishes for a genuinely degenerate pair") {
    const GapResult res = excitation_gaps(OneParticleSpectrum(rv("1,1,2")), 2, 3);
    CHECK(res.gaps == RationalVector{Rational(1), Rational(1)});
    CHECK(res.ties);
  }
  SUBCASE("fully degenerate spectrum gives zero gaps") {
    const GapResult res = excitation_gaps(OneParticleSpectrum(rv("0,0,0")), 2, 3);
    CHECK(res.gaps == RationalVector{Rational(0), Rational(0)});
    CHECK(res.ties);
  }
  SUBCASE("r below two is rejected") {
    CHECK_THROWS_AS(excitation_gaps(OneParticleSpectrum(rv("1,2,3")), 2, 1), DomainError);
  }
}

TEST_CASE("finite-difference shifts auto-shrink and flip") {
  const OneParticleSpectrum h(rv("0,1/3,1,2"));
  SUBCASE("generic weights shift upward") {
    const Rational g = weighted_energy_gap_fd(h, wv("1/2,3/10,1/5"), 2, 2);
    const WeightedEnergyResult res = weighted_energy(h, wv("1/2,3/10,1/5"), 2);
    CHECK(g == res.sorted_config_energies[1].second - res.sorted_config_energies[0].second);
  }
  SUBCASE("tied leading weights force the one-sided direction") {
    const Rational g = weighted_energy_gap_fd(h, wv("2/5,2/5,1/5"), 2, 2);
    const WeightedEnergyResult res = weighted_energy(h, wv("2/5,2/5,1/5"), 2);
    CHECK(g == res.sorted_config_energies[1].second - res.sorted_config_energies[0].second);
  }
  SUBCASE("fully tied weights leave no direction") {
    CHECK_THROWS_AS(weighted_energy_gap_fd(h, wv("1/3,1/3,1/3"), 2, 2), DomainError);
  }
}

TEST_CASE("duality: weighted energy equals the support minimum") {
  Sampler sampler(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int r = 1 + static_cast<int>(sampler.below(4));
    const WeightVector w = sampler.generic_weights(r);
    const OneParticleSpectrum h = sampler.increasing_levels(6);
    const VertexSet vs = generating_vertices(3, 6, w);
    const Rational lhs = weighted_energy(h, w, 3).value;
    const Rational rhs = support_minimum(h, vs).value;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("minimizer occupation is a tight member when no ties") {
  Sampler sampler(37);
  for (int trial = 0; trial < 15; ++trial) {
    const int r = 1 + static_cast<int>(sampler.below(4));
    const WeightVector w = sampler.generic_weights(r);
    const OneParticleSpectrum h = sampler.increasing_levels(6);
    const WeightedEnergyResult res = weighted_energy(h, w, 3);
    if (res.ties) continue;
    const VertexSet vs = generating_vertices(3, 6, w);
    CHECK(membership(res.minimizer_occupation, vs).inside);
    bool is_vertex = false;
    for (const auto& v : vs.vertices)
      if (sort_desc(res.minimizer_occupation) == v) is_vertex = true;
    CHECK(is_vertex);
  }
}

TEST_CASE("large instances take the best-first path") {
  // C(40,10) is far past the full-enumeration cap; with increasing levels
  // the two lowest configurations are the Fermi sea and its single bump
  RationalVector levels(40);
  for (int i = 0; i < 40; ++i) levels[i] = Rational(i + 1, 40);
  const OneParticleSpectrum h(levels);
  const WeightedEnergyResult res = weighted_energy(h, wv("3/5,2/5"), 10);
  REQUIRE(res.sorted_config_energies.size() == 3);  // only the leading r+1
  CHECK(res.sorted_config_energies[0].second == Rational(55, 40));
  CHECK(res.sorted_config_energies[1].second == Rational(56, 40));
  CHECK(res.value == Rational(3, 5) * Rational(11, 8) + Rational(2, 5) * Rational(7, 5));
  CHECK(!res.ties);
}

TEST_CASE("weighted energy is affine in the weights") {
  // three collinear weight vectors: E at the midpoint is the average
  const OneParticleSpectrum h(rv("0,1/4,1/2,3/4,1,5/4"));
  const WeightVector a = wv("3/5,1/5,1/5");
  const WeightVector b = wv("2/5,2/5,1/5");
  RationalVector mid_weights(3);
  for (int i = 0; i < 3; ++i) mid_weights[i] = (a.weights[i] + b.weights[i]) / Rational(2);
  const WeightVector mid{RationalVector(mid_weights)};
  const Rational ea = weighted_energy(h, a, 3).value;
  const Rational eb = weighted_energy(h, b, 3).value;
  const Rational em = weighted_energy(h, mid, 3).value;
  CHECK(em == (ea + eb) / Rational(2));
}

TEST_CASE("lattice density domain membership") {
  SUBCASE("uniform density is always admissible") {
    Sampler sampler(41);
    for (int trial = 0; trial < 8; ++trial) {
      const WeightVector w = sampler.weights(1 + static_cast<int>(sampler.below(4)));
      CHECK(dft_domain_membership(RationalVector(6, Rational(1, 2)), w, 3, 6));
    }
  }
  SUBCASE("a rotated admissible spectrum stays admissible") {
    Sampler sampler(43);
    for (int trial = 0; trial < 10; ++trial) {
      const int r = 1 + static_cast<int>(sampler.below(4));
      const WeightVector w = sampler.generic_weights(r);
      const VertexSet vs = generating_vertices(3, 6, w);
      const RationalVector& source = vs.vertices[sampler.below(vs.vertices.size())];
      RationalVector diag = source;
      const size_t i = sampler.below(6), j = sampler.below(6);
      if (i != j) diag = rotate_diagonal(diag, i, j, sampler.unit_rational(16));
      CHECK(sum(diag) == Rational(3));
      CHECK(schur_horn_check(diag, source));
      CHECK(dft_domain_membership(diag, w, 3, 6));
    }
  }
  SUBCASE("Pauli-violating density is rejected") {
    CHECK(!dft_domain_membership(rv("3/2,1/2,0"), wv("1,0,0"), 2, 3));
  }
  SUBCASE("wrong total is a domain error") {
    CHECK_THROWS_AS(dft_domain_membership(rv("1,1,1"), wv("1"), 2, 3), DomainError);
  }
}
