#pragma once

#include <utility>
#include <vector>

#include "exclusionpoly/configurations.hpp"
#include "exclusionpoly/polytope.hpp"
#include "exclusionpoly/rational.hpp"

namespace exclusionpoly {

/**
 * Non-interacting weighted ensemble energy: the weighted sum of the lowest
 * configuration energies under a one-particle spectrum, together with the
 * mixed occupation vector of the minimizing ensemble.
 */
struct WeightedEnergyResult {
  Rational value;
  // Ascending configuration energies with lexicographic tie-break. Holds the
  // complete list when C(d,N) stays below the enumeration cap, otherwise
  // just the leading r+1 entries from the best-first heap.
  std::vector<std::pair<Configuration, Rational>> sorted_config_energies;
  RationalVector minimizer_occupation;
  bool ties = false;  // degeneracy among (or right after) the leading r energies
};

struct GapResult {
  RationalVector gaps;  // excitation gaps for j = 2..r
  bool ties = false;
};

WeightedEnergyResult weighted_energy(const OneParticleSpectrum& h, const WeightVector& w,
                                     int num_fermions);

/**
 * Excitation gaps computed two ways, asserted equal: directly from sorted
 * configuration energies, and as exact finite differences of the weighted
 * energy under a weight shift from w_1 to w_j.
 */
GapResult excitation_gaps(const OneParticleSpectrum& h, int num_fermions, int r);

/// Exact one-sided finite difference (E_{w'} - E_w)/delta with
/// w' = w + delta (e_j - e_1), delta auto-shrunk to keep w' ordered; the
/// shift direction flips when w_{j-1} = w_j leaves no room upward.
Rational weighted_energy_gap_fd(const OneParticleSpectrum& h, const WeightVector& w,
                                int num_fermions, int j);

/// Lattice-density domain test: sorted density inside the spectral polytope.
bool dft_domain_membership(const RationalVector& density, const WeightVector& w, int num_fermions,
                           int num_orbitals);

}  // namespace exclusionpoly
