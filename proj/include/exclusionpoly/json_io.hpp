#pragma once

#include <json.hpp>

#include "exclusionpoly/configurations.hpp"
#include "exclusionpoly/exclusion_constraints.hpp"
#include "exclusionpoly/polytope.hpp"

namespace exclusionpoly {

// Rationals serialize as exact strings ("p/q", or "p" for integers); nothing
// is ever converted through floating point.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Lineup& lineup);
Lineup lineup_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VertexSet& vs);
VertexSet vertex_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HalfspaceSystem& hs);
HalfspaceSystem halfspace_system_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MembershipCertificate& cert);
MembershipCertificate membership_certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymbolicInequality& ineq);
SymbolicInequality symbolic_inequality_from_json(const nlohmann::json& j);

}  // namespace exclusionpoly
