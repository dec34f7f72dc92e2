#include "exclusionpoly/sampling.hpp"

#include <algorithm>
#include <set>

#include "exclusionpoly/errors.hpp"
#include "exclusionpoly/majorization.hpp"

namespace exclusionpoly {

Rational Sampler::unit_rational(long denominator) {
  return Rational(below(denominator + 1), denominator);
}

WeightVector Sampler::generic_weights(int r, long scale) {
  std::set<long> picks;
  while (static_cast<int>(picks.size()) < r) picks.insert(1 + below(scale));
  std::vector<long> values(picks.begin(), picks.end());
  std::reverse(values.begin(), values.end());
  long total = 0;
  for (long v : values) total += v;
  RationalVector w(r);
  for (int j = 0; j < r; ++j) w[j] = Rational(values[j], total);
  return WeightVector(w);
}

WeightVector Sampler::weights(int r, long scale) {
  std::vector<long> values(r);
  long total = 0;
  for (int j = 0; j < r; ++j) {
    values[j] = 1 + below(scale);
    total += values[j];
  }
  std::sort(values.rbegin(), values.rend());
  RationalVector w(r);
  for (int j = 0; j < r; ++j) w[j] = Rational(values[j], total);
  return WeightVector(w);
}

RationalVector Sampler::nonnegative_with_sum(int length, const Rational& total, long scale) {
  std::vector<long> values(length);
  long s = 0;
  while (s == 0) {
    for (int i = 0; i < length; ++i) {
      values[i] = below(scale + 1);
      s += values[i];
    }
  }
  RationalVector out(length);
  for (int i = 0; i < length; ++i) out[i] = Rational(values[i], s) * total;
  return out;
}

OneParticleSpectrum Sampler::increasing_levels(int length, long scale) {
  RationalVector levels(length);
  Rational acc;
  for (int i = 0; i < length; ++i) {
    acc += Rational(below(scale + 1), scale);
    levels[i] = acc;
  }
  return OneParticleSpectrum(levels);
}

RationalVector Sampler::majorized_below(const RationalVector& w, int transfers) {
  RationalVector v = sort_desc(w);
  const int d = static_cast<int>(v.size());
  if (d < 2) return v;
  for (int t = 0; t < transfers; ++t) {
    int i = static_cast<int>(below(d));
    int j = static_cast<int>(below(d));
    if (i == j) continue;
    if (v[i] < v[j]) std::swap(i, j);
    // move a random fraction of the gap from the larger to the smaller; a
    // transfer of at most half the gap never overshoots
    const Rational gap = v[i] - v[j];
    const Rational amount = gap * Rational(below(33), 64);
    v[i] -= amount;
    v[j] += amount;
  }
  return sort_desc(v);
}

}  // namespace exclusionpoly
