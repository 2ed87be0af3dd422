#include <doctest.h>

#include <algorithm>

#include "sumfree/suites.hpp"

using namespace sumfree;

TEST_CASE("suite names cover the dispatcher") {
  const auto names = suite_names();
  CHECK(names.size() == 10);
  for (const auto& n : names) {
    CAPTURE(n);
    CHECK(std::count(names.begin(), names.end(), n) == 1);
  }
  CHECK_THROWS_AS(run_suite("no_such_suite", 0), error);
}

TEST_CASE("downsized randomized suites pass") {
  CHECK(suite_rank(7, 50).ok());
  CHECK(suite_subspace(7, 50).ok());
  CHECK(suite_slimages(7, 20).ok());
  CHECK(suite_seqcount(7, 50).ok());
  CHECK(suite_perturb(7, 50).ok());
}

TEST_CASE("downsized exhaustive suites pass") {
  const SuiteReport bounds = suite_bounds(10, 4);
  CHECK(bounds.ok());
  CHECK(bounds.cases > 0);

  const SuiteReport pfs = suite_pfs(200);
  CHECK(pfs.ok());

  const SuiteReport lucas = suite_lucas();
  CHECK(lucas.ok());
  CHECK(lucas.cases > 0);
}

TEST_CASE("cross-oracle suite on constructed collections") {
  const SuiteReport r = suite_sumfree_cross(3, 4);
  CHECK(r.ok());
  CHECK(r.cases > 0);
}

TEST_CASE("census suite emits counts") {
  const SuiteReport r = suite_census();
  CHECK(r.ok());
  bool has_enumerated = false;
  for (const auto& [key, value] : r.stats)
    if (key == "enumerated") has_enumerated = true;
  CHECK(has_enumerated);
}

TEST_CASE("seeded suites are reproducible") {
  const SuiteReport a = suite_rank(42, 25);
  const SuiteReport b = suite_rank(42, 25);
  CHECK(a.cases == b.cases);
  CHECK(a.stats == b.stats);
}
