// exclusionpoly command line: exact spectral polytopes of fermionic
// occupation spectra, their facet systems, and the non-interacting ensemble
// energies behind them. Every number in and out is an exact rational.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include "exclusionpoly/errors.hpp"
#include "exclusionpoly/exclusion_constraints.hpp"
#include "exclusionpoly/gok.hpp"
#include "exclusionpoly/json_io.hpp"
#include "exclusionpoly/majorization.hpp"
#include "exclusionpoly/parallel.hpp"
#include "exclusionpoly/polytope.hpp"
#include "exclusionpoly/sampling.hpp"

using namespace exclusionpoly;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  int approx_decimals = -1;
  int n = 0;
  int d = 0;
  int r = 0;
  std::string weights_text;
  std::string lambda_text;
  std::string levels_text;
  std::string density_text;
  int budget = 8;
  bool minimal_constraints = false;
  uint64_t seed = 1;
  long samples = 200;
};

std::string fmt(const Rational& x, const Options& opt) {
  std::string s = x.str();
  if (opt.approx_decimals >= 0) s += " (" + x.decimal(opt.approx_decimals) + ")";
  return s;
}

json json_rational(const Rational& x, const Options& opt) {
  if (opt.approx_decimals < 0) return to_json(x);
  return json{{"exact", x.str()}, {"decimal", x.decimal(opt.approx_decimals)}};
}

json json_vector(const RationalVector& v, const Options& opt) {
  if (opt.approx_decimals < 0) return to_json(v);
  json arr = json::array();
  for (const auto& x : v) arr.push_back(json_rational(x, opt));
  return arr;
}

std::string config_str(const Configuration& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

// Weight resolution: an explicit list wins; otherwise canonical generic
// weights for r.
WeightVector resolve_weights(const Options& opt) {
  if (!opt.weights_text.empty()) {
    const WeightVector w(parse_rational_list(opt.weights_text));
    if (opt.r > 0 && opt.r != w.r)
      throw DomainError("--r disagrees with the number of positive weights");
    return w;
  }
  if (opt.r <= 0) throw DomainError("give either --w or --r");
  return WeightVector::generic(opt.r);
}

void resolve_instance(Options& opt, int r) {
  if (opt.n <= 0 || opt.d <= 0) {
    const auto [n, d] = default_instance(r);
    if (opt.n <= 0) opt.n = n;
    if (opt.d <= 0) opt.d = d;
  }
}

void emit(const json& payload, const Options& opt) {
  if (opt.format == "json")
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << payload.dump(2) << "\n";  // text commands print before reaching here
}

// ---------------------------------------------------------------- lineups

int cmd_lineups(Options opt) {
  if (opt.r <= 0) throw DomainError("lineups needs --r");
  resolve_instance(opt, opt.r);
  const auto lineups = enumerate_lineups(opt.n, opt.d, opt.r);

  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& l : lineups) arr.push_back(to_json(l));
    emit(json{{"n", opt.n}, {"d", opt.d}, {"r", opt.r}, {"count", lineups.size()}, {"lineups", arr}},
         opt);
  } else if (opt.format == "csv") {
    std::cout << "index,sequence,witness_h\n";
    for (size_t i = 0; i < lineups.size(); ++i) {
      std::cout << i << ",";
      for (size_t t = 0; t < lineups[i].sequence.size(); ++t) {
        if (t) std::cout << "->";
        std::cout << config_str(lineups[i].sequence[t]);
      }
      std::cout << "," << to_string(lineups[i].witness_h.levels) << "\n";
    }
  } else {
    std::cout << lineups.size() << " lineup(s) of length " << opt.r << " at (N=" << opt.n
              << ", d=" << opt.d << ")\n";
    for (const auto& l : lineups) {
      std::cout << "  ";
      for (size_t t = 0; t < l.sequence.size(); ++t) {
        if (t) std::cout << " -> ";
        std::cout << config_str(l.sequence[t]);
      }
      std::cout << "   witness h = " << to_string(l.witness_h.levels) << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------- vertices

int cmd_vertices(Options opt) {
  const WeightVector w = resolve_weights(opt);
  resolve_instance(opt, w.r);
  const VertexSet vs = generating_vertices(opt.n, opt.d, w);

  if (opt.format == "json") {
    emit(to_json(vs), opt);
  } else if (opt.format == "csv") {
    std::cout << "index";
    for (int i = 1; i <= opt.d; ++i) std::cout << ",v" << i;
    std::cout << "\n";
    for (size_t j = 0; j < vs.vertices.size(); ++j) {
      std::cout << j;
      for (const auto& x : vs.vertices[j]) std::cout << "," << x.str();
      std::cout << "\n";
    }
  } else {
    std::cout << vs.vertices.size() << " generating vertex(es) at (N=" << opt.n << ", d=" << opt.d
              << "), w = " << to_string(w.weights) << "\n";
    for (size_t j = 0; j < vs.vertices.size(); ++j) {
      std::cout << "  v(" << j + 1 << ") = (";
      for (size_t i = 0; i < vs.vertices[j].size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << fmt(vs.vertices[j][i], opt);
      }
      std::cout << ")   from ";
      const auto& seq = vs.provenance[j].sequence;
      for (size_t t = 0; t < seq.size(); ++t) {
        if (t) std::cout << "->";
        std::cout << config_str(seq[t]);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------ check

// LP redundancy pruning of the instantiated constraint list: a constraint is
// dropped when its maximum over the remaining system (plus normalization,
// ordering and positivity) cannot exceed the bound.
std::vector<SymbolicInequality> prune_redundant(std::vector<SymbolicInequality> cs,
                                                const WeightVector& w, int n, int d) {
  for (size_t i = 0; i < cs.size();) {
    LinearProgram lp;
    lp.num_vars = d;
    RationalVector objective(d);
    for (int k = 0; k < d; ++k) objective[k] = Rational(cs[i].lambda_coeffs[k]);
    lp.objective = objective;
    lp.equalities.push_back({RationalVector(d, Rational(1)), Rational(n)});
    for (int k = 0; k + 1 < d; ++k) {
      RationalVector row(d);
      row[k] = -1;
      row[k + 1] = 1;
      lp.inequalities.push_back({std::move(row), Rational(0)});
    }
    {
      RationalVector row(d);
      row[d - 1] = -1;
      lp.inequalities.push_back({std::move(row), Rational(0)});
    }
    for (size_t j = 0; j < cs.size(); ++j) {
      if (j == i) continue;
      RationalVector row(d);
      for (int k = 0; k < d; ++k) row[k] = Rational(cs[j].lambda_coeffs[k]);
      lp.inequalities.push_back({std::move(row), cs[j].bound(w)});
    }
    bool redundant = false;
    try {
      redundant = lp_maximize(lp).value <= cs[i].bound(w);
    } catch (const LpUnboundedError&) {
      redundant = false;
    }
    if (redundant)
      cs.erase(cs.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return cs;
}

int cmd_check(Options opt) {
  if (opt.lambda_text.empty()) throw DomainError("check needs --lambda");
  const WeightVector w = resolve_weights(opt);
  const RationalVector lambda = parse_rational_list(opt.lambda_text);
  if (opt.d <= 0) opt.d = static_cast<int>(lambda.size());
  if (opt.n <= 0) throw DomainError("check needs --n");

  const VertexSet vs = generating_vertices(opt.n, opt.d, w);
  const MembershipCertificate cert = membership(lambda, vs);

  json payload{{"n", opt.n}, {"d", opt.d}, {"weights", to_json(w.weights)},
               {"lambda", to_json(lambda)}, {"membership", to_json(cert)}};

  const RationalVector sorted = sort_desc(lambda);
  bool closed_form_inside = true;
  bool have_closed_form = w.r <= 4 && sorted.back().sign() >= 0;
  if (have_closed_form) {
    auto cs = constraints_for_r(w.r, opt.n, opt.d);
    if (opt.minimal_constraints) cs = prune_redundant(cs, w, opt.n, opt.d);
    json slacks = json::array();
    for (const auto& ineq : cs) {
      const EvaluationResult res = evaluate(ineq, sorted, w);
      closed_form_inside = closed_form_inside && res.satisfied;
      slacks.push_back(json{{"family", ineq.family},
                            {"lambda_coeffs", ineq.lambda_coeffs},
                            {"bound", json_rational(ineq.bound(w), opt)},
                            {"slack", json_rational(res.slack, opt)},
                            {"satisfied", res.satisfied}});
    }
    payload["constraint_slacks"] = slacks;
    payload["closed_form_inside"] = closed_form_inside;
    payload["routes_agree"] = closed_form_inside == cert.inside;
  }

  if (opt.format == "json") {
    emit(payload, opt);
  } else {
    std::cout << (cert.inside ? "inside" : "outside") << "\n";
    if (cert.inside) {
      std::cout << "  simplex coefficients: " << to_string(cert.simplex_coefficients) << "\n";
    } else {
      std::cout << "  violated prefix k = " << cert.violated_prefix << "\n";
    }
    if (have_closed_form && payload.contains("constraint_slacks")) {
      for (const auto& s : payload["constraint_slacks"]) {
        std::cout << "  family " << s["family"] << " slack "
                  << (s["slack"].is_string() ? s["slack"].get<std::string>()
                                             : s["slack"]["exact"].get<std::string>())
                  << (s["satisfied"].get<bool>() ? "" : "  VIOLATED") << "\n";
      }
      std::cout << "  routes agree: " << (payload["routes_agree"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- facets

int cmd_facets(Options opt) {
  const WeightVector w = resolve_weights(opt);
  resolve_instance(opt, w.r);
  const VertexSet vs = generating_vertices(opt.n, opt.d, w);
  const HalfspaceSystem hs = facets(vs);

  if (opt.format == "json") {
    json payload = to_json(hs);
    payload["n"] = opt.n;
    payload["d"] = opt.d;
    payload["weights"] = to_json(w.weights);
    emit(payload, opt);
  } else if (opt.format == "csv") {
    std::cout << "index";
    for (int i = 1; i <= opt.d; ++i) std::cout << ",c" << i;
    std::cout << ",bound\n";
    for (size_t i = 0; i < hs.inequalities.size(); ++i) {
      std::cout << i;
      for (const auto& c : hs.inequalities[i].coeffs) std::cout << "," << c.str();
      std::cout << "," << hs.inequalities[i].bound.str() << "\n";
    }
  } else {
    std::cout << hs.inequalities.size() << " exclusion facet(s) on the sorted spectrum at (N="
              << opt.n << ", d=" << opt.d << ")\n";
    for (const auto& ineq : hs.inequalities) {
      bool first = true;
      std::cout << "  ";
      for (size_t i = 0; i < ineq.coeffs.size(); ++i) {
        if (ineq.coeffs[i].is_zero()) continue;
        if (!first) std::cout << " + ";
        if (ineq.coeffs[i] != Rational(1)) std::cout << ineq.coeffs[i] << "*";
        std::cout << "l" << i + 1;
        first = false;
      }
      std::cout << " <= " << fmt(ineq.bound, opt) << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- approx

int cmd_approx(Options opt) {
  const WeightVector w = resolve_weights(opt);
  resolve_instance(opt, w.r);
  const ApproximationPair pair = inner_outer(generating_vertices(opt.n, opt.d, w));
  if (opt.format == "json") {
    emit(json{{"n", opt.n},
              {"d", opt.d},
              {"weights", to_json(w.weights)},
              {"v_minus", json_vector(pair.v_minus, opt)},
              {"v_plus", json_vector(pair.v_plus, opt)}},
         opt);
  } else {
    std::cout << "v_minus = " << to_string(pair.v_minus) << "\n";
    std::cout << "v_plus  = " << to_string(pair.v_plus) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ table

int cmd_table(Options opt) {
  const int rmax = opt.r > 0 ? opt.r : opt.budget;
  const int cap = std::min(rmax, opt.budget);
  const bool truncated = rmax > opt.budget;

  // facet-count instances: the smallest sizes showing the generic counts
  const auto facet_instance = [](int r) -> std::pair<int, int> {
    const int n = std::min(r, 3);
    return {n, 2 * n};
  };

  json rows = json::array();
  if (opt.format == "csv") std::cout << "r,n,d,lineups,facets\n";
  for (int r = 1; r <= cap; ++r) {
    const auto [n, d] = default_instance(r);
    const size_t count = enumerate_lineups(n, d, r).size();
    json row{{"r", r}, {"n", n}, {"d", d}, {"lineups", count}};
    std::string facet_text = "-";
    if (r <= 4) {
      const auto [fn, fd] = facet_instance(r);
      const HalfspaceSystem hs = facets(generating_vertices(fn, fd, WeightVector::generic(r)));
      row["facets"] = hs.inequalities.size();
      facet_text = std::to_string(hs.inequalities.size());
    }
    rows.push_back(row);
    if (opt.format == "csv") {
      std::cout << r << "," << n << "," << d << "," << count << "," << (r <= 4 ? facet_text : "")
                << "\n";
    } else if (opt.format != "json") {
      std::printf("r=%2d  (N=%2d, d=%2d)  lineups=%6zu  facets=%s\n", r, n, d, count,
                  facet_text.c_str());
    }
  }
  if (opt.format == "json") {
    emit(json{{"rows", rows}, {"truncated", truncated}, {"budget", opt.budget}}, opt);
  } else if (truncated) {
    if (opt.format == "csv")
      std::cout << "# truncated at budget r=" << opt.budget << "\n";
    else
      std::cout << "(truncated at budget r=" << opt.budget << "; raise --budget to continue)\n";
  }
  return 0;
}

// -------------------------------------------------------------------- gok

int cmd_gok(Options opt) {
  if (opt.levels_text.empty()) throw DomainError("gok needs --h");
  const OneParticleSpectrum h(parse_rational_list(opt.levels_text));
  const WeightVector w = resolve_weights(opt);
  if (opt.n <= 0) throw DomainError("gok needs --n");
  const WeightedEnergyResult res = weighted_energy(h, w, opt.n);

  if (opt.format == "json") {
    json energies = json::array();
    const size_t show = std::min<size_t>(res.sorted_config_energies.size(), 64);
    for (size_t i = 0; i < show; ++i)
      energies.push_back(json{{"configuration", res.sorted_config_energies[i].first},
                              {"energy", json_rational(res.sorted_config_energies[i].second, opt)}});
    emit(json{{"value", json_rational(res.value, opt)},
              {"minimizer_occupation", json_vector(res.minimizer_occupation, opt)},
              {"ties", res.ties},
              {"lowest_energies", energies}},
         opt);
  } else {
    std::cout << "weighted energy = " << fmt(res.value, opt) << "\n";
    std::cout << "minimizer occupation = " << to_string(res.minimizer_occupation) << "\n";
    if (res.ties) std::cout << "(degenerate leading energies; minimizer not unique)\n";
  }
  return 0;
}

// ------------------------------------------------------------------- gaps

int cmd_gaps(Options opt) {
  if (opt.levels_text.empty()) throw DomainError("gaps needs --h");
  if (opt.n <= 0) throw DomainError("gaps needs --n");
  if (opt.r < 2) throw DomainError("gaps needs --r at least 2");
  const OneParticleSpectrum h(parse_rational_list(opt.levels_text));
  const GapResult res = excitation_gaps(h, opt.n, opt.r);
  if (opt.format == "json") {
    emit(json{{"gaps", json_vector(res.gaps, opt)}, {"ties", res.ties}}, opt);
  } else {
    for (size_t j = 0; j < res.gaps.size(); ++j)
      std::cout << "gap " << j + 2 << " = " << fmt(res.gaps[j], opt) << "\n";
    if (res.ties) std::cout << "(ties among leading energies)\n";
  }
  return 0;
}

// -------------------------------------------------------------- dft-check

int cmd_dft_check(Options opt) {
  if (opt.density_text.empty()) throw DomainError("dft-check needs --density");
  const RationalVector density = parse_rational_list(opt.density_text);
  const WeightVector w = resolve_weights(opt);
  if (opt.n <= 0) throw DomainError("dft-check needs --n");
  if (opt.d <= 0) opt.d = static_cast<int>(density.size());
  const bool inside = dft_domain_membership(density, w, opt.n, opt.d);
  if (opt.format == "json")
    emit(json{{"density", to_json(density)}, {"inside", inside}}, opt);
  else
    std::cout << (inside ? "inside" : "outside") << "\n";
  return 0;
}

// ------------------------------------------------------------ figure-data

// Counterclockwise boundary of a 2-d point set (monotone chain); collinear
// points are dropped.
std::vector<RationalVector> polygon_hull(std::vector<RationalVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n <= 2) return pts;
  auto cross = [](const RationalVector& o, const RationalVector& a, const RationalVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<RationalVector> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

int cmd_figure_data(Options opt) {
  const WeightVector w = resolve_weights(opt);
  if ((opt.n > 0 && opt.n != 2) || (opt.d > 0 && opt.d != 3))
    throw DomainError("figure-data supports the planar projection at N=2, d=3 only");
  opt.n = 2;
  opt.d = 3;

  const VertexSet vs = generating_vertices(2, 3, w);
  std::set<RationalVector> projected;
  for (const auto& v : vs.vertices) {
    RationalVector p = v;
    std::sort(p.begin(), p.end());
    do projected.insert({p[0], p[1]});
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<RationalVector> points(projected.begin(), projected.end());
  const std::vector<RationalVector> sigma = polygon_hull(points);

  // the sorted polytope: intersect with the ordering halfspaces and
  // re-enumerate the polygon corners
  std::vector<RationalVector> sigma_down;
  if (affine_dimension(points) < 2) {
    sigma_down = sigma;  // degenerate weights collapse everything to a point
  } else {
    std::vector<Halfspace> system =
        convex_hull_facets(points, 2, RationalVector{Rational(2, 3), Rational(2, 3)});
    system.push_back({{Rational(-1), Rational(1)}, Rational(0)});    // l1 >= l2
    system.push_back({{Rational(-1), Rational(-2)}, Rational(-2)});  // l2 >= l3 = 2-l1-l2
    system.push_back({{Rational(1), Rational(1)}, Rational(2)});     // l3 >= 0
    system.push_back({{Rational(1), Rational(0)}, Rational(1)});     // l1 <= 1
    sigma_down = polygon_hull(enumerate_polytope_vertices(system, 2));
  }

  if (opt.format == "json") {
    json js = json::array(), jd = json::array();
    for (const auto& p : sigma) js.push_back(json_vector(p, opt));
    for (const auto& p : sigma_down) jd.push_back(json_vector(p, opt));
    json verts = json::array();
    for (const auto& v : vs.vertices) verts.push_back(json_vector(v, opt));
    emit(json{{"weights", to_json(w.weights)},
              {"generators", verts},
              {"sigma", js},
              {"sigma_down", jd}},
         opt);
  } else {
    std::cout << "set,index,lambda1,lambda2";
    if (opt.approx_decimals >= 0) std::cout << ",lambda1_dec,lambda2_dec";
    std::cout << "\n";
    auto rows = [&](const char* name, const std::vector<RationalVector>& poly) {
      for (size_t i = 0; i < poly.size(); ++i) {
        std::cout << name << "," << i << "," << poly[i][0].str() << "," << poly[i][1].str();
        if (opt.approx_decimals >= 0)
          std::cout << "," << poly[i][0].decimal(opt.approx_decimals) << ","
                    << poly[i][1].decimal(opt.approx_decimals);
        std::cout << "\n";
      }
    };
    rows("sigma", sigma);
    rows("sigma_down", sigma_down);
  }
  return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyState {
  bool all_ok = true;
  void report(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      std::cout << "ok " << name << "\n";
    } else {
      std::cout << "VIOLATION " << name << (detail.empty() ? "" : ": " + detail) << "\n";
      all_ok = false;
    }
  }
};

int cmd_verify(const Options& opt) {
  VerifyState state;
  Sampler sampler(opt.seed);
  const long trials = std::max<long>(20, opt.samples);

  {  // constructive majorization round-trip
    bool ok = true;
    for (long t = 0; t < trials && ok; ++t) {
      const int d = 2 + static_cast<int>(sampler.below(7));
      RationalVector w(d);
      for (int i = 0; i < d; ++i) w[i] = sampler.unit_rational();
      const RationalVector v = sampler.majorized_below(w, 3);
      const RationalMatrix m = hlp_transfer(v, w);
      const PermutationCombination c = birkhoff_decompose(m);
      ok = is_doubly_stochastic(m) && c.apply(sort_desc(w)) == sort_desc(v) &&
           c.terms.size() <= static_cast<size_t>((d - 1) * (d - 1) + 1);
    }
    state.report("transfer-birkhoff-roundtrip", ok);
  }

  {  // closed forms versus vertex membership, exact, in parallel
    const int n = 2, d = 4;
    bool ok = true;
    for (int r = 1; r <= 4 && ok; ++r) {
      const WeightVector w = sampler.generic_weights(r);
      const VertexSet vs = generating_vertices(n, d, w);
      std::vector<RationalVector> samples;
      for (long t = 0; t < trials; ++t)
        samples.push_back(sort_desc(sampler.nonnegative_with_sum(d, Rational(n))));
      std::vector<char> agree(samples.size(), 0);
      parallel_for(samples.size(), [&](size_t i) {
        const bool closed = all_satisfied(samples[i], w, n, d);
        const bool lp = membership(samples[i], vs).inside;
        agree[i] = closed == lp;
      });
      for (char a : agree) ok = ok && a;
    }
    state.report("closed-form-vs-membership", ok);
  }

  {  // duality between the weighted ensemble energy and the support minimum
    bool ok = true;
    for (long t = 0; t < trials && ok; ++t) {
      const int r = 1 + static_cast<int>(sampler.below(4));
      const WeightVector w = sampler.generic_weights(r);
      const OneParticleSpectrum h = sampler.increasing_levels(6);
      ok = weighted_energy(h, w, 3).value ==
           support_minimum(h, generating_vertices(3, 6, w)).value;
    }
    state.report("gok-duality", ok);
  }

  {  // both excitation-gap routes agree (asserted inside the call)
    bool ok = true;
    try {
      for (long t = 0; t < std::min<long>(trials, 50); ++t) {
        const OneParticleSpectrum h = sampler.increasing_levels(6);
        excitation_gaps(h, 3, 2 + static_cast<int>(sampler.below(3)));
      }
    } catch (const std::exception&) {
      ok = false;
    }
    state.report("gap-routes", ok);
  }

  {  // inclusion relation in both directions
    bool ok = true;
    long included = 0, separated = 0;
    for (long t = 0; t < 4 * trials && (included < trials || separated < trials); ++t) {
      const WeightVector big = sampler.weights(1 + static_cast<int>(sampler.below(4)));
      WeightVector small = big;
      if (sampler.below(2) == 0) {
        small = WeightVector(sampler.majorized_below(big.weights, 2));
      } else {
        small = sampler.weights(1 + static_cast<int>(sampler.below(4)));
      }
      const size_t len = std::max(small.weights.size(), big.weights.size());
      RationalVector a(len), b(len);
      for (size_t i = 0; i < small.weights.size(); ++i) a[i] = small.weights[i];
      for (size_t i = 0; i < big.weights.size(); ++i) b[i] = big.weights[i];
      majorizes(a, b) ? ++included : ++separated;
      try {
        polytope_inclusion(small, big, 3, 6);  // throws if routes disagree
      } catch (const std::exception&) {
        ok = false;
        break;
      }
    }
    state.report("inclusion-relation", ok && included > 0 && separated > 0);
  }

  {  // sandwich between the inner and outer permutohedra
    bool ok = true;
    for (long t = 0; t < trials && ok; ++t) {
      const int r = 1 + static_cast<int>(sampler.below(4));
      const WeightVector w = sampler.generic_weights(r);
      const VertexSet vs = generating_vertices(3, 6, w);
      const ApproximationPair pair = inner_outer(vs);
      ok = membership(pair.v_minus, vs).inside;
      for (const auto& v : vs.vertices) ok = ok && majorizes(v, pair.v_plus);
    }
    state.report("sandwich-bounds", ok);
  }

  {  // JSON round-trips re-parse bit-exactly
    const VertexSet vs = generating_vertices(3, 6, WeightVector::generic(3));
    const json j = to_json(vs);
    bool ok = to_json(vertex_set_from_json(j)).dump() == j.dump();
    const HalfspaceSystem hs = facets(generating_vertices(2, 3, WeightVector::generic(3)));
    const json jh = to_json(hs);
    ok = ok && to_json(halfspace_system_from_json(jh)).dump() == jh.dump();
    state.report("json-roundtrip", ok);
  }

  {  // lineup invariants: prefix closure and dominance consistency
    bool ok = true;
    for (int r = 2; r <= 4 && ok; ++r) {
      const auto longer = enumerate_lineups(3, 6, r);
      std::set<std::vector<Configuration>> shorter;
      for (const auto& l : enumerate_lineups(3, 6, r - 1)) shorter.insert(l.sequence);
      for (const auto& lineup : longer) {
        ok = ok && shorter.count({lineup.sequence.begin(), lineup.sequence.end() - 1}) == 1;
        for (size_t a = 0; a < lineup.sequence.size(); ++a)
          for (size_t b = a + 1; b < lineup.sequence.size(); ++b)
            if (dominance_leq(lineup.sequence[b], lineup.sequence[a])) ok = false;
      }
    }
    state.report("lineup-invariants", ok);
  }

  return state.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exclusionpoly: exact spectral polytopes of fermionic occupation spectra"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file applied as defaults");

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--approx-decimals", opt.approx_decimals,
                 "add decimal approximations with this many digits");

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "number of fermions");
    sub->add_option("--d", opt.d, "number of orbitals");
  };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--w", opt.weights_text, "weights, comma-separated exact rationals");
    sub->add_option("--r", opt.r, "number of nonzero weights (canonical generic weights)");
  };

  CLI::App* lineups = app.add_subcommand("lineups", "enumerate realizable lineups");
  add_instance(lineups);
  lineups->add_option("--r", opt.r, "lineup length")->required();

  CLI::App* vertices = app.add_subcommand("vertices", "generating vertices of the polytope");
  add_instance(vertices);
  add_weights(vertices);

  CLI::App* check = app.add_subcommand("check", "membership of a spectrum, with constraint slacks");
  add_instance(check);
  add_weights(check);
  check->add_option("--lambda", opt.lambda_text, "spectrum, comma-separated")->required();
  check->add_flag("--minimal", opt.minimal_constraints, "prune redundant constraints by LP");

  CLI::App* facets_cmd = app.add_subcommand("facets", "exclusion facets of the sorted polytope");
  add_instance(facets_cmd);
  add_weights(facets_cmd);

  CLI::App* approx = app.add_subcommand("approx", "inner/outer permutohedron generators");
  add_instance(approx);
  add_weights(approx);

  CLI::App* table = app.add_subcommand("table", "lineup and facet counts per setting r");
  table->add_option("--r", opt.r, "largest r to tabulate");
  table->add_option("--budget", opt.budget, "enumeration budget on r (default 8)");

  CLI::App* gok = app.add_subcommand("gok", "weighted ensemble energy of a spectrum");
  gok->set_help_flag("--help", "print help");
  add_instance(gok);
  add_weights(gok);
  gok->add_option("--h", opt.levels_text, "one-particle levels, non-decreasing")->required();

  CLI::App* gaps = app.add_subcommand("gaps", "excitation gaps from weight derivatives");
  gaps->set_help_flag("--help", "print help");
  add_instance(gaps);
  gaps->add_option("--h", opt.levels_text, "one-particle levels, non-decreasing")->required();
  gaps->add_option("--r", opt.r, "number of states")->required();

  CLI::App* dft = app.add_subcommand("dft-check", "lattice density domain membership");
  add_instance(dft);
  add_weights(dft);
  dft->add_option("--density", opt.density_text, "site occupations, comma-separated")->required();

  CLI::App* figure = app.add_subcommand("figure-data", "planar polygon data at N=2, d=3");
  add_instance(figure);
  add_weights(figure);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--seed", opt.seed, "sampling seed");
  verify->add_option("--samples", opt.samples, "trials per property");

  // global options (--format, --approx-decimals, --config) may follow the
  // subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ? 0 : 2;
  }

  try {
    if (lineups->parsed()) return cmd_lineups(opt);
    if (vertices->parsed()) return cmd_vertices(opt);
    if (check->parsed()) return cmd_check(opt);
    if (facets_cmd->parsed()) return cmd_facets(opt);
    if (approx->parsed()) return cmd_approx(opt);
    if (table->parsed()) return cmd_table(opt);
    if (gok->parsed()) return cmd_gok(opt);
    if (gaps->parsed()) return cmd_gaps(opt);
    if (dft->parsed()) return cmd_dft_check(opt);
    if (figure->parsed()) return cmd_figure_data(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
