#include <doctest.h>

#include "leibniz/error.hpp"
#include "leibniz/expr.hpp"
#include "leibniz/json.hpp"

using namespace leibniz;

TEST_CASE("algebras round trip") {
  for (const auto& alg : catalog()) {
    const Json j = to_json(alg);
    CHECK(algebra_from_json(j) == alg);
    CHECK(algebra_from_json(Json::parse(j.dump())) == alg);
  }
}

TEST_CASE("algebra layout") {
  const Json j = to_json(algebra_by_id("A11"));
  CHECK(j["id"] == "A11");
  CHECK(j["validity"] == Json::array({"alpha != 0"}));
  // [g,f] = alpha*e + f
  CHECK(j["table"][2][1] == Json::array({"alpha", "1", "0"}));
}

TEST_CASE("families round trip") {
  for (const auto& f : family_catalog()) {
    const Json j = to_json(f);
    CHECK_MESSAGE(family_from_json(Json::parse(j.dump())) == f, f.id.str());
    CHECK(to_json(family_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("family layout") {
  const Json j = to_json(family_by_id(FamilyId{1, 2}));
  CHECK(j["id"] == "2.1/2");
  CHECK(j["algebra"] == "A1");
  CHECK(j["params"] == Json::array({"k1", "l1", "l2"}));
  CHECK(j["radical"].is_null());
  CHECK(j["conditions"] == Json::array({"l1 != 0"}));
  CHECK(j["slots"]["l2"] == Json::array({1, 1}));
  CHECK(to_json(family_by_id(FamilyId{7, 4}))["radical"] == "s^2 = 1 - 4*alpha");
}

TEST_CASE("constraint systems round trip") {
  for (const auto& alg : catalog()) {
    const auto sys = gen_constraints(alg);
    CHECK(constraint_system_from_json(Json::parse(to_json(sys).dump())) == sys);
  }
  const auto fixed = gen_constraints(algebra_by_id("A7"), Rational(-1, 3));
  const Json j = to_json(fixed);
  CHECK(j["alpha"] == "-1/3");
  CHECK(constraint_system_from_json(j) == fixed);
}

TEST_CASE("grid reports round trip") {
  GridReport r;
  r.algebra = "A7";
  r.alpha = Rational(3, 16);
  r.entries = "-1..1";
  r.total = 19683;
  r.found = 2;
  r.unclassified.push_back(parse_matrix("1,0,0;0,1/2,0;0,0,1"));
  r.family_hits = {{"2.7/2", 1}};
  CHECK(grid_report_from_json(Json::parse(to_json(r).dump())) == r);
}

TEST_CASE("bindings round trip") {
  const Binding b{{Var::k1, Scalar(Rational(-1, 2))}, {Var::p3, Scalar::parse("1 + 2*sqrt(5)")}};
  CHECK(binding_from_json(to_json(b)) == b);
  CHECK(to_json(b).dump() == R"js({"k1":"-1/2","p3":"1 + 2*sqrt(5)"})js");
}

TEST_CASE("classification layout") {
  const OperatorMatrix n = parse_matrix("1,0,0;2,3,1;0,0,1");
  const Algebra& a1 = algebra_by_id("A1");
  const Json j = classification_json("A1", std::nullopt, n, classify(a1, n, std::nullopt));
  CHECK(j["nijenhuis"] == true);
  CHECK(j["matrix"] == "1,0,0;2,3,1;0,0,1");
  CHECK(j["matches"][0]["family"] == "2.1/2");
  CHECK(j["matches"][0]["binding"]["l2"] == "3");
}

TEST_CASE("malformed documents are rejected") {
  Json alg = to_json(algebra_by_id("A1"));
  SUBCASE("missing field") {
    alg.erase("table");
    CHECK_THROWS_AS(algebra_from_json(alg), ValidationError);
  }
  SUBCASE("short table") {
    alg["table"].erase(2);
    CHECK_THROWS_AS(algebra_from_json(alg), ValidationError);
  }
  SUBCASE("non-string constant") {
    alg["table"][0][0][0] = 1;
    CHECK_THROWS_AS(algebra_from_json(alg), ValidationError);
  }
  SUBCASE("matrix variable in a structure constant") {
    alg["table"][0][0][0] = "k1";
    CHECK_THROWS_AS(algebra_from_json(alg), ValidationError);
  }
  SUBCASE("bad expression") {
    alg["table"][0][0][0] = "1 +";
    CHECK_THROWS_AS(algebra_from_json(alg), ParseError);
  }
  SUBCASE("not an object") { CHECK_THROWS_AS(algebra_from_json(Json::array()), ValidationError); }

  Json fam = to_json(family_by_id(FamilyId{1, 2}));
  SUBCASE("family without its guard") {
    fam["conditions"] = Json::array();
    CHECK_THROWS_AS(family_from_json(fam), ValidationError);
  }
  SUBCASE("slot out of range") {
    fam["slots"]["k1"] = Json::array({3, 0});
    CHECK_THROWS_AS(family_from_json(fam), ValidationError);
  }
  SUBCASE("unknown variable") {
    fam["params"] = Json::array({"k1", "q9"});
    CHECK_THROWS_AS(family_from_json(fam), ValidationError);
  }

  SUBCASE("report counts") {
    Json rep = to_json(completeness_report(algebra_by_id("A5"), GridSpec::parse("0"), std::nullopt));
    rep["found"] = -1;
    CHECK_THROWS_AS(grid_report_from_json(rep), ValidationError);
  }
  SUBCASE("alpha type") {
    Json sys = to_json(gen_constraints(algebra_by_id("A5")));
    sys["alpha"] = 3;
    CHECK_THROWS_AS(constraint_system_from_json(sys), ValidationError);
  }
}
