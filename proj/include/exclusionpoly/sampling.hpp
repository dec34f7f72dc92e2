#pragma once

#include <cstdint>
#include <random>

#include "exclusionpoly/configurations.hpp"
#include "exclusionpoly/polytope.hpp"
#include "exclusionpoly/rational.hpp"

namespace exclusionpoly {

/// Deterministic RNG wrapper; avoids std::uniform_int_distribution so that
/// streams are identical across standard library implementations.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }
  long below(long n) { return static_cast<long>(engine_() % static_cast<uint64_t>(n)); }

  /// Uniform-ish rational k/denominator with k in [0, denominator].
  Rational unit_rational(long denominator = 64);

  /// Strictly positive pairwise-distinct descending weights summing to one.
  WeightVector generic_weights(int r, long scale = 200);

  /// Descending nonnegative weights summing to one (ties allowed).
  WeightVector weights(int r, long scale = 64);

  /// Random nonnegative vector of the given length scaled to an exact total;
  /// unsorted.
  RationalVector nonnegative_with_sum(int length, const Rational& total, long scale = 64);

  /// Non-decreasing spectrum of rationals in [0, span].
  OneParticleSpectrum increasing_levels(int length, long scale = 64);

  /// Random vector majorized by w: w hit by `transfers` random Robin Hood
  /// moves (result stays exactly majorized by construction).
  RationalVector majorized_below(const RationalVector& w, int transfers);

 private:
  std::mt19937_64 engine_;
};

}  // namespace exclusionpoly
