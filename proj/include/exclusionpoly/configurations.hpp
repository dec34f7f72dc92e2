#pragma once

#include <utility>
#include <vector>

#include "exclusionpoly/rational.hpp"

namespace exclusionpoly {

/// N-fermion configuration: strictly increasing orbital indices in [1, d].
using Configuration = std::vector<int>;

/// 0/1 indicator of occupied orbitals, exactly N ones.
using OccupationVector = std::vector<int>;

/// Ordered one-particle energy levels, non-decreasing.
struct OneParticleSpectrum {
  RationalVector levels;

  OneParticleSpectrum() = default;
  explicit OneParticleSpectrum(RationalVector v);
  int dimension() const { return static_cast<int>(levels.size()); }
};

/**
 * A length-r sequence of configurations realizable as the r energetically
 * lowest ones under the witness spectrum, with strictly increasing energies
 * along the sequence and every excluded competitor strictly above. `margin`
 * is the optimal strictness slack of the realizability program.
 */
struct Lineup {
  std::vector<Configuration> sequence;
  OneParticleSpectrum witness_h;
  Rational margin;
};

void require_valid_configuration(const Configuration& c, int d);

mpz_class binomial(int d, int n);

/// All C(d,N) configurations in lexicographic order.
std::vector<Configuration> enumerate_configurations(int num_fermions, int num_orbitals);

/// Componentwise dominance: a precedes b under every ordered spectrum.
bool dominance_leq(const Configuration& a, const Configuration& b);

/// Immediate successors in the dominance order (one orbital index bumped).
std::vector<Configuration> dominance_covers(const Configuration& c, int num_orbitals);

/// Immediate predecessors in the dominance order.
std::vector<Configuration> dominance_cocovers(const Configuration& c);

Rational config_energy(const Configuration& c, const OneParticleSpectrum& h);

OccupationVector occupation_vector(const Configuration& c, int num_orbitals);

/**
 * All lineups of length r in lexicographic order. Depth-first search over
 * down-closed prefixes of the dominance order; every prefix is certified by
 * an exact linear program that maximizes the strictness slack of the induced
 * energy ordering (accepted only when strictly positive).
 */
std::vector<Lineup> enumerate_lineups(int num_fermions, int num_orbitals, int length);

/// Smallest generic instance sizes used when a caller gives only r.
std::pair<int, int> default_instance(int length);

}  // namespace exclusionpoly
