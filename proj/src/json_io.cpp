#include "exclusionpoly/json_io.hpp"

#include "exclusionpoly/errors.hpp"

namespace exclusionpoly {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw StructuralError("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

json to_json(const RationalVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

RationalVector rational_vector_from_json(const json& j) {
  if (!j.is_array()) throw StructuralError("expected an array of rationals");
  RationalVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json to_json(const Lineup& lineup) {
  json seq = json::array();
  for (const auto& config : lineup.sequence) seq.push_back(config);
  return json{{"sequence", seq},
              {"witness_h", to_json(lineup.witness_h.levels)},
              {"margin", to_json(lineup.margin)}};
}

Lineup lineup_from_json(const json& j) {
  Lineup lineup;
  for (const auto& c : j.at("sequence")) lineup.sequence.push_back(c.get<Configuration>());
  lineup.witness_h = OneParticleSpectrum(rational_vector_from_json(j.at("witness_h")));
  lineup.margin = rational_from_json(j.at("margin"));
  return lineup;
}

json to_json(const VertexSet& vs) {
  json verts = json::array();
  for (const auto& v : vs.vertices) verts.push_back(to_json(v));
  json prov = json::array();
  for (const auto& l : vs.provenance) prov.push_back(to_json(l));
  return json{{"n", vs.n},
              {"d", vs.d},
              {"weights", to_json(vs.weight.weights)},
              {"vertices", verts},
              {"provenance", prov},
              {"merged_duplicates", vs.merged_duplicates}};
}

VertexSet vertex_set_from_json(const json& j) {
  VertexSet vs;
  vs.n = j.at("n").get<int>();
  vs.d = j.at("d").get<int>();
  vs.weight = WeightVector(rational_vector_from_json(j.at("weights")));
  for (const auto& v : j.at("vertices")) vs.vertices.push_back(rational_vector_from_json(v));
  for (const auto& l : j.at("provenance")) vs.provenance.push_back(lineup_from_json(l));
  vs.merged_duplicates = j.at("merged_duplicates").get<bool>();
  return vs;
}

json to_json(const HalfspaceSystem& hs) {
  json arr = json::array();
  for (const auto& ineq : hs.inequalities)
    arr.push_back(json{{"coeffs", to_json(ineq.coeffs)}, {"bound", to_json(ineq.bound)}});
  return json{{"inequalities", arr}, {"includes_ordering", hs.includes_ordering}};
}

HalfspaceSystem halfspace_system_from_json(const json& j) {
  HalfspaceSystem hs;
  hs.includes_ordering = j.at("includes_ordering").get<bool>();
  for (const auto& ineq : j.at("inequalities"))
    hs.inequalities.push_back(
        {rational_vector_from_json(ineq.at("coeffs")), rational_from_json(ineq.at("bound"))});
  return hs;
}

json to_json(const MembershipCertificate& cert) {
  json j{{"inside", cert.inside}};
  if (cert.inside) {
    j["simplex_coefficients"] = to_json(cert.simplex_coefficients);
  } else {
    j["violated_prefix"] = cert.violated_prefix;
    if (cert.lp_certificate) {
      j["farkas"] = json{{"eq_multipliers", to_json(cert.lp_certificate->eq_multipliers)},
                         {"leq_multipliers", to_json(cert.lp_certificate->leq_multipliers)}};
    }
  }
  return j;
}

MembershipCertificate membership_certificate_from_json(const json& j) {
  MembershipCertificate cert;
  cert.inside = j.at("inside").get<bool>();
  if (cert.inside) {
    cert.simplex_coefficients = rational_vector_from_json(j.at("simplex_coefficients"));
  } else {
    cert.violated_prefix = j.at("violated_prefix").get<int>();
    if (j.contains("farkas")) {
      FarkasCertificate fc;
      fc.eq_multipliers = rational_vector_from_json(j.at("farkas").at("eq_multipliers"));
      fc.leq_multipliers = rational_vector_from_json(j.at("farkas").at("leq_multipliers"));
      cert.lp_certificate = std::move(fc);
    }
  }
  return cert;
}

json to_json(const SymbolicInequality& ineq) {
  return json{{"family", ineq.family},
              {"first_r", ineq.first_r},
              {"n", ineq.n},
              {"d", ineq.d},
              {"lambda_coeffs", ineq.lambda_coeffs},
              {"weight_coeffs", ineq.weight_coeffs},
              {"constant", json{{"n_coeff", ineq.constant_n_coeff}, {"offset", ineq.constant_offset}}}};
}

SymbolicInequality symbolic_inequality_from_json(const json& j) {
  SymbolicInequality ineq;
  ineq.family = j.at("family").get<int>();
  ineq.first_r = j.at("first_r").get<int>();
  ineq.n = j.at("n").get<int>();
  ineq.d = j.at("d").get<int>();
  ineq.lambda_coeffs = j.at("lambda_coeffs").get<std::vector<long>>();
  ineq.weight_coeffs = j.at("weight_coeffs").get<std::vector<long>>();
  ineq.constant_n_coeff = j.at("constant").at("n_coeff").get<long>();
  ineq.constant_offset = j.at("constant").at("offset").get<long>();
  return ineq;
}

}  // namespace exclusionpoly
