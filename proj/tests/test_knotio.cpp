#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "knotbound/errors.hpp"
#include "knotbound/knotio.hpp"
#include "knotbound/skein.hpp"

using namespace knotbound;

namespace {

const char* kTrefoilPD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

std::vector<Crossing> sorted_crossings(const PDCode& d) {
  auto c = d.crossings();
  std::sort(c.begin(), c.end(), [](const Crossing& a, const Crossing& b) {
    return std::tie(a.arcs, a.over_forward) < std::tie(b.arcs, b.over_forward);
  });
  return c;
}

}  // namespace

TEST_SUITE("knotio") {

TEST_CASE("presentation parsing") {
  CHECK(std::get<BraidWord>(parse_presentation("2: 1 1 1", PresentationKind::braid)) == BraidWord{{1, 1, 1}, 2});
  CHECK(std::get<BraidWord>(parse_presentation("3: 1 -2 1", PresentationKind::braid)) ==
        BraidWord{{1, -2, 1}, 3});
  CHECK(std::get<Pretzel>(parse_presentation("3,3,3", PresentationKind::pretzel)) == Pretzel{1, 1, 1});
  CHECK(std::get<Pretzel>(parse_presentation("-1, 1, 3", PresentationKind::pretzel)) == Pretzel{-1, 0, 1});
  CHECK(std::get<Twist>(parse_presentation("6", PresentationKind::twist)) == Twist{3});
  CHECK(std::get<Twist>(parse_presentation("0", PresentationKind::twist)) == Twist{0});
  const auto pd = std::get<PDCode>(parse_presentation(kTrefoilPD, PresentationKind::pd));
  CHECK(pd.size() == 3);

  CHECK_THROWS_AS(parse_presentation("3,4,3", PresentationKind::pretzel), InputError);
  CHECK_THROWS_AS(parse_presentation("3,3", PresentationKind::pretzel), InputError);
  CHECK_THROWS_AS(parse_presentation("5", PresentationKind::twist), InputError);
  CHECK_THROWS_AS(parse_presentation("-2", PresentationKind::twist), InputError);
  CHECK_THROWS_AS(parse_presentation("2: 1 2", PresentationKind::braid), InputError);
  CHECK_THROWS_AS(parse_presentation("2: 0", PresentationKind::braid), InputError);
  CHECK_THROWS_AS(parse_presentation("1 1 1", PresentationKind::braid), InputError);
}

TEST_CASE("presentation text round trip") {
  for (const char* t : {"2: 1 1 1", "4: 1 -3 2"}) {
    const auto p = parse_presentation(t, PresentationKind::braid);
    CHECK(parse_presentation(format_presentation(p), PresentationKind::braid) == p);
  }
  for (const char* t : {"3,3,3", "-1,1,5"}) {
    const auto p = parse_presentation(t, PresentationKind::pretzel);
    CHECK(format_presentation(p) == t);
  }
  CHECK(format_presentation(Twist{3}) == "6");
}

TEST_CASE("pd code errors") {
  CHECK_THROWS_AS(parse_pd("X[1,1,1,2]"), InputError);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]"), InputError);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3"), ParseError);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[0,1,1,2]"), InputError);
  // Consistent labels, but two closed curves would cross only once.
  CHECK_THROWS_AS(parse_pd("X[1,1,2,2] X[3,4,3,4]"), InputError);
  CHECK_THROWS_AS(parse_pd("X[1,1,2,3] X[2,4,3,4]"), InputError);
  CHECK_NOTHROW(parse_pd("X[1,3,2,4] X[3,1,4,2]"));
}

TEST_CASE("empty code is the unknot") {
  const PDCode d = parse_pd("");
  CHECK(d.size() == 0);
  CHECK(d.component_count() == 1);
  CHECK(d.writhe() == 0);
  CHECK(to_pd(Twist{0}) == PDCode());
}

TEST_CASE("builders") {
  CHECK(to_pd(Pretzel{1, 1, 1}).size() == 9);
  CHECK(to_pd(Pretzel{1, 1, 1}).component_count() == 1);
  CHECK(to_pd(BraidWord{{1, 1, 1}, 2}).size() == 3);
  CHECK(to_pd(BraidWord{{}, 3}).component_count() == 3);
  CHECK(to_pd(BraidWord{{1}, 3}).component_count() == 2);
  CHECK(pretzel_band_top({3, 3, 3}, 0) == 2);
  CHECK(pretzel_band_top({3, 3, 3}, 2) == 8);
  CHECK(pretzel_band_top({-1, 1, 3}, 1) == 1);
}

TEST_CASE("crossing signs") {
  const PDCode right = to_pd(BraidWord{{1, 1, 1}, 2});
  const PDCode left = to_pd(BraidWord{{-1, -1, -1}, 2});
  for (int i = 0; i < 3; ++i) {
    CHECK(crossing_sign(right, i) == +1);
    CHECK(crossing_sign(left, i) == -1);
    CHECK(crossing_sign(switch_crossing(right, i), i) == -1);
  }
  CHECK(writhe(right) == 3);
  CHECK(component_count(right) == 1);
  // The usual tabulated trefoil code is the left-handed one.
  CHECK(parse_pd(kTrefoilPD).writhe() == -3);
  for (int i = 0; i < 9; ++i) CHECK(crossing_sign(to_pd(Pretzel{1, 1, 1}), i) == +1);
}

TEST_CASE("smoothing and switching the trefoil") {
  const PDCode tref = to_pd(BraidWord{{1, 1, 1}, 2});
  const PDCode hopf = smooth_crossing(tref, 0);
  CHECK(hopf.size() == 2);
  CHECK(hopf.component_count() == 2);
  CHECK(hopf.writhe() == 2);
  CHECK(homfly(hopf) == homfly(to_pd(BraidWord{{1, 1}, 2})));
  CHECK(homfly(switch_crossing(tref, 1)) == HomflyValue(1));
}

TEST_CASE("smoothing a kink gives a two component unlink") {
  const PDCode kink = to_pd(BraidWord{{1}, 2});
  REQUIRE(kink.size() == 1);
  CHECK(kink.component_count() == 1);
  const PDCode split = smooth_crossing(kink, 0);
  CHECK(split.size() == 0);
  CHECK(split.free_loops() == 2);
  CHECK(split.component_count() == 2);
}

TEST_CASE("random diagram properties") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const BraidWord w = testing::random_braid(rng);
    const PDCode d = braid_closure(w);
    CAPTURE(format_presentation(w));
    CHECK(d.component_count() == permutation_cycles(w));
    int sum = 0;
    for (int l : w.letters) sum += l > 0 ? 1 : -1;
    CHECK(d.writhe() == sum);

    // PD text has no notation for crossingless loops.
    if (d.free_loops() == 0 && d.size() > 0) {
      const PDCode back = parse_pd(format_pd(d));
      CHECK(back.free_loops() == 0);
      CHECK(sorted_crossings(back) == sorted_crossings(d));
    }

    for (int i = 0; i < d.size(); ++i) {
      CHECK(switch_crossing(switch_crossing(d, i), i) == d);
      CHECK(crossing_sign(switch_crossing(d, i), i) == -crossing_sign(d, i));
      const int delta = smooth_crossing(d, i).component_count() - d.component_count();
      CHECK((delta == 1 || delta == -1));
    }
  }
}

TEST_CASE("family diagrams survive a text round trip") {
  for (const Presentation& p : {Presentation(Pretzel{1, 0, 2}), Presentation(Pretzel{-1, 0, 1}),
                                Presentation(Twist{2}), Presentation(Pretzel{1, 1, 1})}) {
    const PDCode d = to_pd(p);
    const PDCode back = parse_pd(format_pd(d));
    CHECK(sorted_crossings(back) == sorted_crossings(d));
  }
}

TEST_CASE("canonical relabelling") {
  const PDCode a = parse_pd(kTrefoilPD);
  auto shifted = a.crossings();
  for (auto& c : shifted)
    for (int& l : c.arcs) l += 10;
  CHECK(PDCode::canonical(shifted, 0) == a);
}

}
