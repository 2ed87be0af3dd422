#include <doctest.h>

#include <vector>

#include "sumfree/errors.hpp"
#include "sumfree/progression.hpp"

using namespace sumfree;

TEST_CASE("greedy set at P=31, k=3") {
  const FieldSetup fs = progression_free_set(31, 3, PfsMethod::greedy);
  // Hand trace over the window {1..10}: 3,6,7,8,9 are rejected
  // (1+3=2*2, 2+6=2*4, 1+7=2*4, 2+8=2*5, 1+9=2*5); the rest survive.
  CHECK(fs.Y == std::vector<std::uint64_t>{1, 2, 4, 5, 10});
  CHECK(fs.R == 5);
  CHECK(progression_free_violations(fs.Y, 3).empty());
}

TEST_CASE("tiny windows") {
  const FieldSetup fs7 = progression_free_set(7, 3, PfsMethod::greedy);
  CHECK(fs7.Y == std::vector<std::uint64_t>{1, 2});

  // Window floor(2/3) is empty; the degenerate fallback is {1}.
  const FieldSetup fs2 = progression_free_set(2, 3, PfsMethod::greedy);
  CHECK(fs2.Y == std::vector<std::uint64_t>{1});
}

TEST_CASE("violation scan finds the 3-term progression in {1,2,3}") {
  const auto v = progression_free_violations({1, 2, 3}, 3);
  REQUIRE(v.size() == 1);
  CHECK(v[0].ys == std::vector<std::uint64_t>{1, 3, 2});  // 1 + 3 = 2*2
}

TEST_CASE("violation scan at k=4") {
  // 1 + 1 + 4 = 3*2 is the only nonconstant solution inside {1,2,4}.
  const auto v = progression_free_violations({1, 2, 4}, 4);
  REQUIRE(v.size() == 1);
  CHECK(v[0].ys == std::vector<std::uint64_t>{1, 1, 4, 2});
}

TEST_CASE("behrend construction is progression-free") {
  const FieldSetup fs = progression_free_set(1009, 3, PfsMethod::behrend);
  CHECK(fs.method == PfsMethod::behrend);
  CHECK(!fs.Y.empty());
  for (std::uint64_t y : fs.Y) {
    CHECK(y >= 1);
    CHECK(y <= 1009 / 3);
  }
  CHECK(progression_free_violations(fs.Y, 3).empty());

  const FieldSetup g = progression_free_set(1009, 3, PfsMethod::greedy);
  CHECK(progression_free_violations(g.Y, 3).empty());
}

TEST_CASE("colored line") {
  FieldSetup fs;
  fs.P = 7;
  fs.k = 3;
  fs.Y = {1};
  fs.R = 1;
  const auto line = colored_line(fs);
  REQUIRE(line.size() == 1);
  CHECK(line[0] == std::vector<std::uint64_t>{1, 1, 5});  // -2*1 mod 7

  // Every line tuple sums to 0 mod P.
  const FieldSetup fs31 = progression_free_set(31, 3, PfsMethod::greedy);
  for (const auto& t : colored_line(fs31)) {
    std::uint64_t s = 0;
    for (std::uint64_t v : t) s += v;
    CHECK(s % 31 == 0);
  }
}

TEST_CASE("composite or undersized P is rejected") {
  CHECK_THROWS_AS(progression_free_set(15, 3, PfsMethod::greedy), error);
  CHECK_THROWS_AS(progression_free_set(1, 3, PfsMethod::greedy), error);
}
