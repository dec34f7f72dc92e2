#include "exclusionpoly/configurations.hpp"

#include <algorithm>
#include <set>

#include "exclusionpoly/errors.hpp"
#include "exclusionpoly/linprog.hpp"

namespace exclusionpoly {

OneParticleSpectrum::OneParticleSpectrum(RationalVector v) : levels(std::move(v)) {
  if (levels.empty()) throw StructuralError("spectrum needs at least one level");
  for (size_t i = 0; i + 1 < levels.size(); ++i)
    if (levels[i + 1] < levels[i]) throw StructuralError("spectrum levels must be non-decreasing");
}

void require_valid_configuration(const Configuration& c, int d) {
  if (c.empty()) throw StructuralError("empty configuration");
  int prev = 0;
  for (int orb : c) {
    if (orb <= prev || orb > d) throw StructuralError("configuration orbitals must be strictly increasing in [1, d]");
    prev = orb;
  }
}

mpz_class binomial(int d, int n) {
  if (n < 0 || n > d) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), d, n);
  return out;
}

std::vector<Configuration> enumerate_configurations(int num_fermions, int num_orbitals) {
  if (num_fermions < 1 || num_fermions > num_orbitals)
    throw DomainError("enumerate_configurations needs 1 <= N <= d");
  std::vector<Configuration> out;
  Configuration c(num_fermions);
  for (int i = 0; i < num_fermions; ++i) c[i] = i + 1;
  for (;;) {
    out.push_back(c);
    // next combination in lexicographic order
    int i = num_fermions - 1;
    while (i >= 0 && c[i] == num_orbitals - (num_fermions - 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < num_fermions; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

bool dominance_leq(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) throw StructuralError("dominance_leq needs equal particle numbers");
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::vector<Configuration> dominance_covers(const Configuration& c, int num_orbitals) {
  std::vector<Configuration> out;
  const int n = static_cast<int>(c.size());
  for (int k = 0; k < n; ++k) {
    const int bumped = c[k] + 1;
    if (bumped > num_orbitals) continue;
    if (k + 1 < n && bumped == c[k + 1]) continue;
    Configuration next = c;
    next[k] = bumped;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Configuration> dominance_cocovers(const Configuration& c) {
  std::vector<Configuration> out;
  const int n = static_cast<int>(c.size());
  for (int k = 0; k < n; ++k) {
    const int lowered = c[k] - 1;
    if (lowered < 1) continue;
    if (k > 0 && lowered == c[k - 1]) continue;
    Configuration prev = c;
    prev[k] = lowered;
    out.push_back(std::move(prev));
  }
  return out;
}

Rational config_energy(const Configuration& c, const OneParticleSpectrum& h) {
  Rational e;
  for (int orb : c) {
    if (orb < 1 || orb > h.dimension()) throw StructuralError("configuration incompatible with spectrum dimension");
    e += h.levels[orb - 1];
  }
  return e;
}

OccupationVector occupation_vector(const Configuration& c, int num_orbitals) {
  require_valid_configuration(c, num_orbitals);
  OccupationVector bits(num_orbitals, 0);
  for (int orb : c) bits[orb - 1] = 1;
  return bits;
}

namespace {

// Energy of a configuration expressed in the level-gap variables
// delta_k = h_{k+1} - h_k (with h_1 pinned to zero, which is harmless since
// a constant shift of h moves every configuration energy equally):
// E_c = sum_k delta_k * #{orbitals of c above k}.
RationalVector energy_gap_coefficients(const Configuration& c, int d) {
  RationalVector coeffs(d - 1);
  for (int k = 1; k < d; ++k) {
    int above = 0;
    for (int orb : c)
      if (orb > k) ++above;
    coeffs[k - 1] = above;
  }
  return coeffs;
}

struct RealizabilityOutcome {
  bool realizable = false;
  OneParticleSpectrum witness;
  Rational margin;
};

// Certifies that `prefix` is the strict energetic lineup of its length for
// some non-decreasing spectrum: maximize eps subject to
//   delta >= 0, sum(delta) <= 1,
//   E(prefix[t]) + eps <= E(prefix[t+1]),
//   E(prefix.back()) + eps <= E(j) for each dominance-minimal excluded j.
// Realizable iff the optimal eps is strictly positive.
RealizabilityOutcome check_prefix_realizable(const std::vector<Configuration>& prefix,
                                             const std::set<Configuration>& minimal_excluded, int d) {
  RealizabilityOutcome out;
  if (prefix.size() == 1 && minimal_excluded.empty()) {
    // lone configuration, nothing to separate against
    out.realizable = true;
    out.witness = OneParticleSpectrum(RationalVector(d, Rational(0)));
    out.margin = Rational(0);
    return out;
  }
  const int num_gap_vars = d - 1;

  LinearProgram lp;
  lp.num_vars = num_gap_vars + 1;  // gaps, then eps
  lp.nonnegative.assign(lp.num_vars, true);
  RationalVector objective(lp.num_vars);
  objective[num_gap_vars] = 1;  // maximize eps
  lp.objective = objective;

  RationalVector norm(lp.num_vars);
  for (int k = 0; k < num_gap_vars; ++k) norm[k] = 1;
  lp.inequalities.push_back({norm, Rational(1)});  // h_d - h_1 <= 1

  auto add_separation = [&](const Configuration& below, const Configuration& above) {
    const RationalVector eb = energy_gap_coefficients(below, d);
    const RationalVector ea = energy_gap_coefficients(above, d);
    RationalVector row(lp.num_vars);
    for (int k = 0; k < num_gap_vars; ++k) row[k] = eb[k] - ea[k];
    row[num_gap_vars] = 1;
    lp.inequalities.push_back({std::move(row), Rational(0)});
  };
  for (size_t t = 0; t + 1 < prefix.size(); ++t) add_separation(prefix[t], prefix[t + 1]);
  for (const auto& j : minimal_excluded) add_separation(prefix.back(), j);

  const OptimizationResult opt = lp_maximize(lp);
  out.margin = opt.value;
  out.realizable = opt.value.sign() > 0;
  RationalVector levels(d);
  for (int k = 1; k < d; ++k) levels[k] = levels[k - 1] + opt.minimizer[k - 1];
  out.witness = OneParticleSpectrum(std::move(levels));
  return out;
}

struct LineupSearch {
  int d, target;
  std::vector<Lineup> found;

  void dfs(std::vector<Configuration>& prefix, std::set<Configuration>& prefix_set,
           const std::set<Configuration>& candidates, const OneParticleSpectrum& witness,
           const Rational& margin) {
    if (static_cast<int>(prefix.size()) == target) {
      found.push_back({prefix, witness, margin});
      return;
    }
    for (const Configuration& cand : candidates) {
      prefix.push_back(cand);
      prefix_set.insert(cand);

      std::set<Configuration> next_candidates = candidates;
      next_candidates.erase(cand);
      for (const Configuration& cover : dominance_covers(cand, d)) {
        bool ready = true;
        for (const Configuration& below : dominance_cocovers(cover))
          if (!prefix_set.count(below)) { ready = false; break; }
        if (ready) next_candidates.insert(cover);
      }

      const RealizabilityOutcome check = check_prefix_realizable(prefix, next_candidates, d);
      if (check.realizable) dfs(prefix, prefix_set, next_candidates, check.witness, check.margin);

      prefix_set.erase(cand);
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<Lineup> enumerate_lineups(int num_fermions, int num_orbitals, int length) {
  if (num_fermions < 1 || num_fermions > num_orbitals)
    throw DomainError("enumerate_lineups needs 1 <= N <= d");
  if (length < 1) throw DomainError("enumerate_lineups needs r >= 1");
  if (binomial(num_orbitals, num_fermions) < length)
    throw DomainError("enumerate_lineups: r exceeds the number of configurations");

  Configuration ground(num_fermions);
  for (int i = 0; i < num_fermions; ++i) ground[i] = i + 1;

  std::vector<Configuration> prefix{ground};
  std::set<Configuration> prefix_set{ground};
  std::set<Configuration> candidates;
  for (const Configuration& cover : dominance_covers(ground, num_orbitals)) {
    bool ready = true;
    for (const Configuration& below : dominance_cocovers(cover))
      if (!prefix_set.count(below)) { ready = false; break; }
    if (ready) candidates.insert(cover);
  }

  const RealizabilityOutcome root = check_prefix_realizable(prefix, candidates, num_orbitals);
  LineupSearch search{num_orbitals, length, {}};
  if (root.realizable) search.dfs(prefix, prefix_set, candidates, root.witness, root.margin);
  return search.found;
}

std::pair<int, int> default_instance(int length) {
  if (length < 1) throw DomainError("default_instance needs r >= 1");
  const int n = std::max(1, length - 1);
  const int d = 2 * n + std::max(1, length - 1);
  return {n, d};
}

}  // namespace exclusionpoly
