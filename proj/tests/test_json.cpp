#include <doctest.h>

#include "helpers.hpp"
#include "knotbound/errors.hpp"
#include "knotbound/json_io.hpp"

using namespace knotbound;
using testing::L;

TEST_SUITE("json") {

TEST_CASE("integers") {
  CHECK(integer_json(Integer(-5)) == Json(-5));
  const Integer big = Integer(1) << 100;
  CHECK(integer_json(big) == Json(big.str()));
  CHECK(integer_from_json(integer_json(big)) == big);
  CHECK(integer_from_json(Json("-12")) == -12);
  CHECK_THROWS_AS(integer_from_json(Json("12a")), InputError);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), InputError);
}

TEST_CASE("polynomials") {
  CHECK(laurent_json(L("2v^2 - v^4")).dump() == "[[2,2],[4,-1]]");
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const LaurentPoly p = testing::random_poly(rng);
    CHECK(laurent_from_json(laurent_json(p)) == p);
  }
  CHECK_THROWS_AS(laurent_from_json(Json::parse("[[2,1],[2,1]]")), InputError);
  CHECK_THROWS_AS(laurent_from_json(Json::parse("[[2,0]]")), InputError);
  CHECK_THROWS_AS(laurent_from_json(Json::parse("{}")), InputError);

  const HomflyValue h = HomflyValue::monomial(1, 1, -1) - HomflyValue::monomial(1, 3, -1) +
                        HomflyValue::monomial(1, 1, 1);
  CHECK(homfly_json(h).dump() == "[[1,-1,1],[1,1,1],[3,-1,-1]]");
  CHECK(homfly_from_json(homfly_json(h)) == h);
  CHECK_THROWS_AS(homfly_from_json(Json::parse("[[\"a\",0,1]]")), InputError);
}

TEST_CASE("presentations") {
  for (const Presentation& p :
       {Presentation(BraidWord{{1, -2, 1}, 3}), Presentation(Pretzel{1, -1, 2}), Presentation(Twist{3})}) {
    const Json j = presentation_json(p);
    CHECK(j["text"] == format_presentation(p));
    CHECK(presentation_from_json(j) == p);
  }
  const PDCode d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(std::get<PDCode>(presentation_from_json(presentation_json(d))) == d);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"kind":"torus","value":3})")), InputError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"kind":"twist"})")), InputError);
}

TEST_CASE("reports") {
  BoundReport r;
  r.bound = Bound::infinity();
  r.rules_fired = {Rule::i_b, Rule::refined_exclusion};
  CHECK(bound_report_json(r).dump() ==
        R"({"bound":"inf","rules":["i-b","refined-n-exclusion"],"genus_assumption":true,"exhausted":false})");
  r.bound = Bound::finite(3);
  CHECK(bound_report_json(r)["bound"] == 3);

  DecompositionCertificate c{1, {1}, {LaurentPoly(1)}};
  CHECK(certificate_json(c).dump() == R"({"n":1,"shifts":[1],"factors":[[[0,1]]]})");

  SequenceCertificate s;
  s.steps = {Twist{1}, Twist{0}};
  s.changes = {{0, 1, 2, 0}};
  s.claimed_length = 1;
  CHECK(sequence_json(s).dump() ==
        R"({"steps":["2","0"],"changes":[{"band":0,"crossing":1,"from":2,"to":0}],"claimed_length":1})");
}

}
