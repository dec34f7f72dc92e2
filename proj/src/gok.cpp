#include "exclusionpoly/gok.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "exclusionpoly/errors.hpp"
#include "exclusionpoly/majorization.hpp"

namespace exclusionpoly {

namespace {

constexpr long kFullEnumerationCap = 1000000;

// k smallest configuration energies via best-first search over dominance
// covers: energies are monotone along the dominance order, so the down-set
// popped from the heap is exactly the energetic bottom.
std::vector<std::pair<Configuration, Rational>> lowest_energies(const OneParticleSpectrum& h,
                                                                int num_fermions, long k) {
  const int d = h.dimension();
  Configuration ground(num_fermions);
  for (int i = 0; i < num_fermions; ++i) ground[i] = i + 1;

  using Entry = std::pair<Rational, Configuration>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return b.first < a.first;  // min-heap on energy
    return b.second < a.second;                        // lexicographic tie-break
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  std::set<Configuration> queued;
  heap.push({config_energy(ground, h), ground});
  queued.insert(ground);

  std::vector<std::pair<Configuration, Rational>> out;
  while (!heap.empty() && static_cast<long>(out.size()) < k) {
    auto [energy, config] = heap.top();
    heap.pop();
    out.push_back({config, energy});
    for (Configuration& next : dominance_covers(config, d)) {
      if (queued.count(next)) continue;
      queued.insert(next);
      heap.push({config_energy(next, h), std::move(next)});
    }
  }
  return out;
}

}  // namespace

WeightedEnergyResult weighted_energy(const OneParticleSpectrum& h, const WeightVector& w,
                                     int num_fermions) {
  const int d = h.dimension();
  if (num_fermions < 1 || num_fermions > d) throw DomainError("weighted_energy needs 1 <= N <= d");
  const mpz_class total = binomial(d, num_fermions);
  if (total < w.r) throw DomainError("weighted_energy: more nonzero weights than configurations");

  WeightedEnergyResult result;
  if (total <= kFullEnumerationCap) {
    for (const Configuration& c : enumerate_configurations(num_fermions, d))
      result.sorted_config_energies.push_back({c, config_energy(c, h)});
    std::sort(result.sorted_config_energies.begin(), result.sorted_config_energies.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second < b.second;
                return a.first < b.first;
              });
  } else {
    result.sorted_config_energies = lowest_energies(h, num_fermions, w.r + 1);
  }

  result.minimizer_occupation.assign(d, Rational(0));
  for (int j = 0; j < w.r; ++j) {
    const auto& [config, energy] = result.sorted_config_energies[j];
    result.value += w.weights[j] * energy;
    for (int orb : config) result.minimizer_occupation[orb - 1] += w.weights[j];
  }

  const long scan = std::min<long>(static_cast<long>(result.sorted_config_energies.size()), w.r + 1);
  for (long j = 0; j + 1 < scan; ++j)
    if (result.sorted_config_energies[j].second == result.sorted_config_energies[j + 1].second)
      result.ties = true;
  return result;
}

Rational weighted_energy_gap_fd(const OneParticleSpectrum& h, const WeightVector& w,
                                int num_fermions, int j) {
  if (j < 2 || j > w.r) throw DomainError("gap index must lie in 2..r");

  // room for increasing w_j at the expense of w_1 while keeping the
  // descending order; fall back to the opposite direction when w_{j-1} = w_j
  Rational room_up;
  if (j == 2)
    room_up = (w.at(1) - w.at(2)) / Rational(2);
  else
    room_up = std::min(w.at(j - 1) - w.at(j), w.at(1) - w.at(2));

  Rational delta;
  if (room_up.sign() > 0) {
    delta = room_up / Rational(2);
  } else {
    const Rational room_down = w.at(j) - w.at(j + 1);
    if (room_down.sign() <= 0)
      throw DomainError("degenerate weights leave no admissible shift for the gap derivative");
    delta = -room_down / Rational(2);
  }

  RationalVector shifted = w.weights;
  shifted[0] -= delta;
  shifted[j - 1] += delta;
  const WeightVector w_shifted{RationalVector(shifted)};

  const Rational base = weighted_energy(h, w, num_fermions).value;
  const Rational moved = weighted_energy(h, w_shifted, num_fermions).value;
  return (moved - base) / delta;
}

GapResult excitation_gaps(const OneParticleSpectrum& h, int num_fermions, int r) {
  if (r < 2) throw DomainError("excitation_gaps needs r >= 2");
  const WeightVector w = WeightVector::generic(r);
  const WeightedEnergyResult base = weighted_energy(h, w, num_fermions);

  GapResult result;
  result.ties = base.ties;
  const Rational ground = base.sorted_config_energies[0].second;
  for (int j = 2; j <= r; ++j) {
    const Rational direct = base.sorted_config_energies[j - 1].second - ground;
    const Rational differenced = weighted_energy_gap_fd(h, w, num_fermions, j);
    if (direct != differenced)
      throw std::logic_error("excitation gap routes disagree; weighted energy is not linear");
    result.gaps.push_back(direct);
  }
  return result;
}

bool dft_domain_membership(const RationalVector& density, const WeightVector& w, int num_fermions,
                           int num_orbitals) {
  if (static_cast<int>(density.size()) != num_orbitals)
    throw DomainError("dft_domain_membership: density length mismatch");
  if (sum(density) != Rational(num_fermions))
    throw DomainError("dft_domain_membership: density must sum to N");
  const VertexSet vs = generating_vertices(num_fermions, num_orbitals, w);
  return membership(density, vs).inside;
}

}  // namespace exclusionpoly
