#include <doctest.h>

#include "exclusionpoly/exclusion_constraints.hpp"
#include "exclusionpoly/gok.hpp"
#include "exclusionpoly/json_io.hpp"

using namespace exclusionpoly;

namespace {

WeightVector wv(const char* text) { return WeightVector(parse_rational_list(text)); }

}  // namespace

TEST_CASE("rationals serialize as exact strings") {
  CHECK(to_json(Rational(9, 10)).dump() == "\"9/10\"");
  CHECK(to_json(Rational(-3)).dump() == "\"-3\"");
  CHECK(rational_from_json(to_json(Rational(19, 20))) == Rational(19, 20));
  CHECK(rational_from_json(nlohmann::json(4)) == Rational(4));
}

TEST_CASE("vertex set round-trips bit-exactly") {
  const VertexSet vs = generating_vertices(3, 6, wv("1/2,3/10,1/5"));
  const nlohmann::json j = to_json(vs);
  const VertexSet back = vertex_set_from_json(j);
  CHECK(to_json(back).dump() == j.dump());
  CHECK(back.vertices == vs.vertices);
  CHECK(back.weight.weights == vs.weight.weights);
  REQUIRE(back.provenance.size() == vs.provenance.size());
  for (size_t i = 0; i < back.provenance.size(); ++i) {
    CHECK(back.provenance[i].sequence == vs.provenance[i].sequence);
    CHECK(back.provenance[i].witness_h.levels == vs.provenance[i].witness_h.levels);
  }
}

TEST_CASE("halfspace system round-trips bit-exactly") {
  const HalfspaceSystem hs = facets(generating_vertices(2, 3, wv("1/2,2/5,1/10")));
  const nlohmann::json j = to_json(hs);
  const HalfspaceSystem back = halfspace_system_from_json(j);
  CHECK(to_json(back).dump() == j.dump());
  REQUIRE(back.inequalities.size() == hs.inequalities.size());
  for (size_t i = 0; i < back.inequalities.size(); ++i) {
    CHECK(back.inequalities[i].coeffs == hs.inequalities[i].coeffs);
    CHECK(back.inequalities[i].bound == hs.inequalities[i].bound);
  }
}

TEST_CASE("membership certificates round-trip both ways") {
  const VertexSet vs = generating_vertices(2, 3, wv("1/2,2/5,1/10"));
  SUBCASE("inside") {
    const MembershipCertificate cert = membership(parse_rational_list("2/3,2/3,2/3"), vs);
    const nlohmann::json j = to_json(cert);
    CHECK(to_json(membership_certificate_from_json(j)).dump() == j.dump());
  }
  SUBCASE("outside") {
    const MembershipCertificate cert = membership(parse_rational_list("1,19/20,1/20"), vs);
    REQUIRE(!cert.inside);
    const nlohmann::json j = to_json(cert);
    const MembershipCertificate back = membership_certificate_from_json(j);
    CHECK(back.violated_prefix == cert.violated_prefix);
    CHECK(to_json(back).dump() == j.dump());
  }
}

TEST_CASE("symbolic inequalities round-trip with their affine constants") {
  for (const auto& ineq : constraints_for_r(4, 3, 6)) {
    const nlohmann::json j = to_json(ineq);
    const SymbolicInequality back = symbolic_inequality_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    CHECK(back.lambda_coeffs == ineq.lambda_coeffs);
    CHECK(back.bound(wv("2/5,3/10,1/5,1/10")) == ineq.bound(wv("2/5,3/10,1/5,1/10")));
  }
}
