#include "ample/error.hpp"
#include "ample/io.hpp"

#include <doctest.h>

using namespace ample;

namespace {

const BaseSequence kTwo(2);
const BaseSequence kTwoThree({2}, {3});

}  // namespace

TEST_CASE("base round trip") {
  CHECK(base_from_json(to_json(kTwoThree)) == kTwoThree);
  CHECK(base_from_json(Json(2)) == kTwo);
  CHECK(to_json(kTwo).dump() == R"({"pre":[],"period":[2]})");
  CHECK_THROWS_AS(base_from_json(Json(1)), ParseError);
  CHECK_THROWS_AS(base_from_json(Json::parse(R"({"pre":[2]})")), ParseError);
  CHECK_THROWS_AS(base_from_json(Json("two")), ParseError);
}

TEST_CASE("clopen and point round trips") {
  const ClopenSet u(kTwoThree, 2, {1, 4});
  CHECK(clopen_from_json(to_json(u), kTwoThree) == u);
  CHECK(to_json(ClopenSet(kTwo, 2, {0, 2})).dump() == R"({"depth":1,"residues":[0]})");
  CHECK_THROWS_AS(clopen_from_json(Json::parse(R"({"depth":1,"residues":[2]})"), kTwo), ParseError);
  const Point x(kTwo, {1}, {1, 0});
  CHECK(point_from_json(to_json(x), kTwo) == x);
  CHECK(point_from_json(Json(-1), kTwo) == Point(kTwo, {}, {1}));
  CHECK_THROWS_AS(point_from_json(Json::parse(R"({"pre":[3],"period":[0]})"), kTwo), ParseError);
}

TEST_CASE("element round trip") {
  const TfgElement g(kTwoThree, 2, {1, 1, 1, 1, 1, -5});
  CHECK(element_from_json(to_json(g), kTwo) == g);
  const TfgElement delta = element_from_json(Json::parse(R"({"depth":1,"cocycle":[1,-1]})"), kTwo);
  CHECK(delta == TfgElement(kTwo, 1, {1, -1}));
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"depth":1,"cocycle":[1,0]})"), kTwo), ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"depth":1})"), kTwo), ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"depth":1,"cocycle":[1.5,-1]})"), kTwo), ParseError);
  // Depth guards are resource limits, not malformed input.
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"depth":30,"cocycle":[0]})"), kTwo.with_depth_limit(20)),
                  ResourceError);
}

TEST_CASE("compound values") {
  const GenPermSpec spec(ClopenSet(kTwo, 2, {0}), {TfgElement::identity(kTwo), odometer(kTwo)}, Permutation({1, 0}));
  CHECK(genperm_from_json(to_json(spec), kTwo) == spec);
  const TwoCycleSpec delta(ClopenSet(kTwo, 1, {0}), odometer(kTwo));
  CHECK(two_cycle_from_json(to_json(delta), kTwo) == delta);
  CHECK(permutation_from_json(Json::parse("[2,0,1]")) == Permutation({2, 0, 1}));
  CHECK_THROWS_AS(permutation_from_json(Json::parse("[0,0]")), ParseError);

  const ClopenSet u1(kTwo, 2, {0, 1}), u2(kTwo, 2, {1, 2});
  const Certificate c = decompose_local(TfgElement(kTwo, 2, {2, 0, -2, 0}), u1, u2);
  const Certificate back = certificate_from_json(to_json(c), kTwo);
  CHECK(back.factors == c.factors);
  CHECK(back.target == c.target);
  CHECK(verify_certificate(back));
  Json bad = to_json(c);
  bad["factors"][0]["tag"] = "U3";
  CHECK_THROWS_AS(certificate_from_json(bad, kTwo), ParseError);

  const NDConstruction nd = build_construction(kTwo, 2);
  const NDConstruction nd_back = construction_from_json(to_json(nd), kTwo);
  REQUIRE(nd_back.stages.size() == 2);
  CHECK(nd_back.stages[1].u == nd.stages[1].u);
  CHECK(nd_back.stages[1].f2 == nd.stages[1].f2);

  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(0)) == "0/1");
}

TEST_CASE("report shapes") {
  const KRPartition kr = build_kr(ClopenSet(kTwo, 1, {0}), odometer(kTwo));
  const Json j = to_json(kr);
  REQUIRE(j["towers"].size() == 1);
  CHECK(j["towers"][0]["height"] == 2);
  CHECK(j["towers"][0]["levels"].size() == 2);
  const StabilizerClass sc = classify_finite_stabilizer(FinitePointSet({Point::zero(kTwo), Point::from_integer(kTwo, 3)}));
  CHECK(to_json(sc).dump() == R"({"class":"Maximal","orbits":[[0,1]]})");
  const TorsionFactorization tf = factor_kernel(TfgElement(kTwo, 1, {2, -2}));
  CHECK(to_json(tf)["order1"] == 2);
  CHECK(to_json(wreath_form(odometer(kTwo), 1))["carry"] == Json::parse("[0,1]"));
}
