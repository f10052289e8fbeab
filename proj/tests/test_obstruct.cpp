#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "knotbound/errors.hpp"
#include "knotbound/obstruct.hpp"
#include "knotbound/skein.hpp"

using namespace knotbound;
using testing::L;

namespace {

std::vector<Rule> rules(std::initializer_list<Rule> r) { return r; }

const LaurentPoly kRight = L("2v^2 - v^4");
const LaurentPoly kLeft = L("2v^-2 - v^-4");

}  // namespace

TEST_SUITE("obstruct") {

TEST_CASE("bound values") {
  CHECK(Bound::finite(3).str() == "3");
  CHECK(Bound::infinity().str() == "inf");
  CHECK(Bound::finite(3) < Bound::finite(4));
  CHECK(Bound::finite(1000) < Bound::infinity());
  CHECK(Bound::infinity() == Bound::infinity());
  CHECK_THROWS(Bound::infinity().value());
}

TEST_CASE("theorem bound examples") {
  auto r = theorem_bound(pretzel_p0(1, 1, 1));
  CHECK(r.bound == Bound::finite(3));
  CHECK(r.rules_fired == rules({Rule::i_a}));
  CHECK(r.genus_one_assumed);

  r = theorem_bound(twist_p0(3));
  CHECK(r.bound == Bound::finite(3));
  CHECK(r.rules_fired == rules({Rule::ii_a}));

  r = theorem_bound(kLeft);
  CHECK(r.bound.is_infinite());
  CHECK(std::count(r.rules_fired.begin(), r.rules_fired.end(), Rule::i_b) == 1);

  r = theorem_bound(kRight);
  CHECK(r.bound == Bound::finite(1));
  CHECK(r.rules_fired == rules({Rule::i_a}));

  r = theorem_bound(LaurentPoly(1));
  CHECK(r.bound == Bound::finite(0));
  CHECK(r.rules_fired.empty());
}

TEST_CASE("clauses i-c and ii-b") {
  // h_m = 1 followed by a negative coefficient.
  auto r = theorem_bound(L("v^2 - 2v^4 + 5v^6 - 3v^8"));
  CHECK(r.bound == Bound::finite(2));
  CHECK(r.rules_fired == rules({Rule::i_a, Rule::i_c}));
  // h_M = 2 > 1.
  r = theorem_bound(L("-v^-2 + 5 - 5v^2 + 2v^4"));
  CHECK(r.bound.is_infinite());
  CHECK(r.rules_fired == rules({Rule::i_b, Rule::ii_a, Rule::ii_b}));
  r = theorem_bound(L("3 - 4v^2 + 2v^4"));
  CHECK(r.bound == Bound::finite(3));
  CHECK(r.rules_fired == rules({Rule::ii_a, Rule::ii_b}));
}

TEST_CASE("inputs that are not knot p0") {
  CHECK_THROWS_AS(theorem_bound(L("v^2")), InputError);
  CHECK_THROWS_AS(theorem_bound(L("v^-1 + v - 1")), InputError);
  CHECK_THROWS_AS(theorem_bound(LaurentPoly()), InputError);
  CHECK_THROWS_AS(refined_bound(L("2 - v^2"), 3), InputError);
  CHECK_THROWS_AS(refined_bound(kRight, -1), InputError);
}

TEST_CASE("refined bound examples") {
  auto r = refined_bound(kRight, 32);
  CHECK(r.bound == Bound::finite(1));
  CHECK(r.rules_fired == rules({Rule::refined_exclusion}));
  CHECK(refined_bound(pretzel_p0(1, 1, 1), 32).bound == Bound::finite(3));
  r = refined_bound(kLeft, 32);
  CHECK(r.bound.is_infinite());
  CHECK(r.rules_fired == rules({Rule::i_b, Rule::refined_exclusion}));
  CHECK(refined_bound(LaurentPoly(1), 5).bound == Bound::finite(0));
  r = refined_bound(pretzel_p0(1, 1, 1), 2);
  CHECK(r.exhausted);
  CHECK(r.bound == Bound::finite(3));
}

TEST_CASE("refined bound agrees with hand divided g_n for P(3,3,3)") {
  const LaurentPoly p0 = pretzel_p0(1, 1, 1);
  for (int n = 0; n <= 2; ++n) {
    const auto g = divide_exact(p0 - LaurentPoly::monomial(1, 2 * n), L("1 - v^2"));
    REQUIRE(g);
    CHECK(bounds(*g).min_coeff == -1);
  }
}

TEST_CASE("refined bound never below the theorem on finite cases") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> d(0, 6);
    const LaurentPoly p0 = pretzel_p0(d(rng), d(rng), d(rng));
    CHECK(refined_bound(p0, 40).bound >= theorem_bound(p0).bound);
  }
}

TEST_CASE("gordian distance one test") {
  auto g = gordian_one_test(kRight, LaurentPoly(1), 1, 0, +1);
  CHECK(g.pass);
  REQUIRE(g.f);
  CHECK(*g.f == LaurentPoly(1));
  g = gordian_one_test(kLeft, LaurentPoly(1), 1, 0, +1);
  CHECK_FALSE(g.pass);
  CHECK_FALSE(g.f);
  g = gordian_one_test(kLeft, kLeft, 1, 1, +1);
  CHECK(g.pass);
  CHECK_FALSE(g.f);
  // Negative change from the left trefoil to the unknot.
  CHECK(gordian_one_test(kLeft, LaurentPoly(1), 1, 0, -1).pass);
  CHECK_THROWS_AS(gordian_one_test(kRight, LaurentPoly(1), 1, 0, 0), InputError);
}

TEST_CASE("gordian left trefoil candidate is not a square") {
  // v^-1 p0 - v = (v^-1 - v) v^{-6}(v^4 + v^2 - 1) after the a2 shift.
  const auto q = divide_exact(shift(kLeft, -1) - L("v^1"), L("v^-1 - v^1"));
  REQUIRE(q);
  CHECK(shift(*q, -2) == shift(L("v^4 + v^2 - 1"), -6));
  CHECK_FALSE(sqrt_exact(shift(*q, -2)));
}

TEST_CASE("decomposition search examples") {
  SearchBounds b;
  auto r = decomposition_search(kRight, 1, b);
  REQUIRE(r.certificate);
  CHECK(r.certificate->shifts == std::vector<int>{1});
  CHECK(r.certificate->factors == std::vector<LaurentPoly>{LaurentPoly(1)});
  CHECK(certificate_holds(*r.certificate, kRight));

  r = decomposition_search(twist_p0(1), 1, b);
  REQUIRE(r.certificate);
  CHECK(r.certificate->shifts == std::vector<int>{-1});
  CHECK(r.certificate->factors == std::vector<LaurentPoly>{LaurentPoly(1)});

  for (int n = 1; n <= 3; ++n) CHECK_FALSE(decomposition_search(kLeft, n, b).certificate);
  CHECK_FALSE(decomposition_search(pretzel_p0(1, 1, 1), 2, b).certificate);
  CHECK(decomposition_search(pretzel_p0(1, 1, 1), 3, b).certificate);
}

TEST_CASE("decomposition search bounds") {
  SearchBounds b;
  b.coeff_bound = 1;
  const auto r = decomposition_search(twist_p0(2), 2, b);
  CHECK(r.candidate_count == 9 * 2);
  CHECK(r.search_size == 18);
  b.ceiling = 10;
  CHECK_THROWS_AS(decomposition_search(twist_p0(2), 2, b), GuardError);
  b = SearchBounds{};
  b.deg_span = 40;
  CHECK_THROWS_AS(decomposition_search(twist_p0(2), 2, b), GuardError);
  b = SearchBounds{};
  b.shift_lo = 3;
  b.shift_hi = 2;
  CHECK_THROWS_AS(decomposition_search(twist_p0(2), 2, b), InputError);
  CHECK_THROWS_AS(decomposition_search(twist_p0(2), 0, SearchBounds{}), InputError);
}

TEST_CASE("certificates") {
  DecompositionCertificate c{1, {1}, {LaurentPoly(1)}};
  CHECK(reassemble(c) == kRight);
  CHECK(certificate_holds(c, kRight));
  c.factors = {L("v^-2 - 1 + v^2")};
  CHECK_FALSE(certificate_holds(c, kRight));
  c = DecompositionCertificate{2, {1}, {LaurentPoly(1)}};
  CHECK_FALSE(certificate_holds(c, kRight));
}

}
