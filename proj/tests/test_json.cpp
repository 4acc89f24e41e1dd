#include <doctest.h>

#include <irrlat/errors.hpp>
#include <irrlat/json_io.hpp>

#include "generators.hpp"

using namespace irrlat;
using namespace irrlat::io;

TEST_CASE("lattice round trip keeps huge entries exact") {
  ZMatrix g(2, 2);
  g(0, 0) = Int("123456789012345678901234567890");
  g(1, 1) = -7;
  g(0, 1) = g(1, 0) = Int("-99999999999999999999999999999999");
  lattice::IntegralLattice l(g);

  Json j = to_json(l);
  CHECK(j["rank"] == 2);
  CHECK(j["gram"][0][0] == "123456789012345678901234567890");
  CHECK(lattice_from_json(j) == l);

  // through text
  CHECK(lattice_from_json(Json::parse(j.dump())) == l);
}

TEST_CASE("lattice parsing accepts plain JSON integers") {
  auto l = lattice_from_json(Json::parse(R"({"rank":2,"gram":[[0,1],[1,0]]})"));
  CHECK(lattice::discriminant(l) == -1);
}

TEST_CASE("lattice parsing rejects malformed input") {
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"rank":2})")), parse_error);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"rank":2,"gram":[[1,0]]})")),
                  parse_error);
  CHECK_THROWS_AS(
      lattice_from_json(Json::parse(R"({"rank":1,"gram":[[1.5]]})")),
      parse_error);
  CHECK_THROWS_AS(
      lattice_from_json(Json::parse(R"({"rank":1,"gram":[["12x"]]})")),
      parse_error);
  // symmetric violation surfaces as an invariant error, not a parse error
  CHECK_THROWS_AS(
      lattice_from_json(Json::parse(R"({"rank":2,"gram":[[0,1],[2,0]]})")),
      invariant_error);
}

TEST_CASE("embedding round trip") {
  testgen::Rng rng(51);
  auto l = testgen::random_nondegenerate_lattice(rng, 3, -4, 4);
  lattice::SublatticeEmbedding e(l, ZMatrix{{1, 0, 2}, {0, 1, -1}});
  Json j = to_json(e);
  auto back = embedding_from_json(j);
  CHECK(back.ambient() == e.ambient());
  CHECK(back.coords() == e.coords());
}

TEST_CASE("certificate serialization schema") {
  std::vector<Check> checks;
  checks.push_back(Check{"sample-check", Rat(3), "<=",
                         CheckValue(PowerExpr(Rat(2), -69, 2)), true});
  auto cert = FeasibilityCertificate::from_checks(std::move(checks), {"note"});
  Json j = to_json(cert);
  CHECK(j["verdict"] == "feasible");
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["statement"] == "sample-check");
  CHECK(j["checks"][0]["lhs"] == "3");
  CHECK(j["checks"][0]["rel"] == "<=");
  CHECK(j["checks"][0]["rhs"]["base"] == "2");
  CHECK(j["checks"][0]["rhs"]["num"] == -69);
  CHECK(j["checks"][0]["rhs"]["den"] == 2);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["notes"][0] == "note");
}

TEST_CASE("bound report serialization carries witnesses") {
  auto report = bounds::min_genus_bruteforce(Int(5));
  Json j = to_json(report);
  CHECK(j["value"] == "8");
  CHECK(j["paper_statement"] == "genus-min-bruteforce");
  REQUIRE(j["witnesses"].size() == 2);
  CHECK(j["witnesses"][0]["k"] == "2");
  CHECK(j["witnesses"][1]["k"] == "3");

  auto rec = bounds::max_genus_p1n_recursive(bounds::CurveClassP1n(3, Int(4)));
  Json jr = to_json(rec);
  CHECK(jr["value"] == "9");
  CHECK(jr["witnesses"][0]["e"] == "1");
}

TEST_CASE("rationals serialize in lowest terms") {
  CHECK(to_json(make_rat(Int(4), Int(6))) == "2/3");
  CHECK(to_json(make_rat(Int(4), Int(2))) == "2");
  CHECK(to_json(make_rat(Int(-4), Int(6))) == "-2/3");
}
