#include <doctest.h>

#include "knotbound/errors.hpp"
#include "knotbound/sequences.hpp"

using namespace knotbound;

namespace {

std::vector<Presentation> pretzels(std::initializer_list<std::array<int, 3>> bands) {
  std::vector<Presentation> out;
  for (auto b : bands) out.push_back(Pretzel{(b[0] - 1) / 2, (b[1] - 1) / 2, (b[2] - 1) / 2});
  return out;
}

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("pretzel sequence shape") {
  const auto cert = pretzel_sequence(1, 1, 1);
  CHECK(cert.claimed_length == 3);
  CHECK(cert.steps == pretzels({{3, 3, 3}, {1, 3, 3}, {1, 1, 3}, {-1, 1, 3}}));
  CHECK(cert.changes.size() == 3);
  CHECK(cert.changes[0].band == 0);
  CHECK(cert.changes[0].crossing_index == 2);
  CHECK(cert.changes[2].from_count == 1);
  CHECK(cert.changes[2].to_count == -1);

  const auto other = pretzel_sequence(3, 1, 2);
  CHECK(other.claimed_length == 4);
  CHECK(other.steps.back() == Presentation(Pretzel{3, -1, 0}));
  CHECK_THROWS_AS(pretzel_sequence(0, 1, 1), InputError);
}

TEST_CASE("twist sequence shape") {
  const auto cert = twist_sequence(1);
  CHECK(cert.claimed_length == 1);
  CHECK(cert.steps == std::vector<Presentation>{Twist{1}, Twist{0}});
  CHECK(twist_sequence(4).steps.size() == 5);
  CHECK_THROWS_AS(twist_sequence(0), InputError);
}

TEST_CASE("verification of generated sequences") {
  CHECK(verify_sequence(pretzel_sequence(1, 1, 1)).valid);
  CHECK(verify_sequence(twist_sequence(2)).valid);
  CHECK(verify_sequence(pretzel_sequence(2, 1, 3)).valid);
}

TEST_CASE("corrupted certificates") {
  auto cert = pretzel_sequence(2, 2, 2);
  // Drop an intermediate step: the parameter changes by 4 at step 0.
  cert.steps.erase(cert.steps.begin() + 1);
  cert.changes.erase(cert.changes.begin() + 1);
  cert.changes[0].to_count = 1;
  cert.claimed_length = static_cast<int>(cert.changes.size());
  auto report = verify_sequence(cert);
  CHECK_FALSE(report.valid);
  REQUIRE(report.failing_step);
  CHECK(*report.failing_step == 0);

  cert = pretzel_sequence(1, 1, 1);
  cert.changes[1].crossing_index = 0;
  report = verify_sequence(cert);
  CHECK_FALSE(report.valid);
  CHECK(*report.failing_step == 1);

  cert = twist_sequence(2);
  cert.claimed_length = 1;
  CHECK_FALSE(verify_sequence(cert).valid);

  cert = twist_sequence(2);
  cert.steps.pop_back();
  cert.changes.pop_back();
  cert.claimed_length = 1;
  report = verify_sequence(cert);
  CHECK_FALSE(report.valid);

  // Not a genus one family presentation.
  cert = twist_sequence(1);
  cert.steps[0] = BraidWord{{1, 1, 1}, 2};
  CHECK_FALSE(verify_sequence(cert).valid);
}

TEST_CASE("verification respects the crossing guard") {
  VerifyOptions vo;
  vo.skein.max_crossings = 4;
  CHECK_THROWS_AS(verify_sequence(pretzel_sequence(1, 1, 1), vo), GuardError);
}

}
