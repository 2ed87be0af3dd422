#include <doctest.h>

#include <json.hpp>

#include <string>

#include "sumfree/construction.hpp"
#include "sumfree/distributions.hpp"
#include "sumfree/json_io.hpp"
#include "sumfree/verification.hpp"

using namespace sumfree;

TEST_CASE("tensor weights serialize as exact fractions") {
  SymmetricTensor t;
  t.r = 1;
  t.arity = 3;
  t.weight[{1, 0, 0}] = make_rat(1, 3);
  const nlohmann::json j = to_json(t);
  CHECK(j["r"] == 1);
  CHECK(j["arity"] == 3);
  REQUIRE(j["orbits"].size() == 1);
  CHECK(j["orbits"][0]["rep"] == nlohmann::json::array({1, 0, 0}));
  CHECK(j["orbits"][0]["weight"] == "1/3");
}

TEST_CASE("collection round trip") {
  const ConstructResult r = construct(2, 3, 6, 5);
  const nlohmann::json j = to_json(r.zm_view);
  const SumFreeCollection back = collection_from_json(j);
  CHECK(back.mode == r.zm_view.mode);
  CHECK(back.m == r.zm_view.m);
  CHECK(back.k == r.zm_view.k);
  CHECK(back.n == r.zm_view.n);
  CHECK(back.seed == r.zm_view.seed);
  CHECK(back.P == r.zm_view.P);
  CHECK(back.tuples == r.zm_view.tuples);
}

TEST_CASE("malformed collections fail with the io error") {
  try {
    collection_from_json(nlohmann::json::object());
    FAIL("expected parse failure");
  } catch (const error& e) {
    CHECK(e.code() == errc::io);
  }
}

TEST_CASE("dump_stable is deterministic") {
  const ConstructResult r = construct(2, 3, 6, 2);
  CHECK(dump_stable(to_json(r)) == dump_stable(to_json(construct(2, 3, 6, 2))));
}

TEST_CASE("csv summary shape") {
  CHECK(construct_csv_header() == "m,k,n,seed,P,R,x0,candidates,isolated");
  const ConstructResult r = construct(2, 3, 6, 0);
  const std::string row = construct_csv_row(r);
  CHECK(row.rfind("2,3,6,0,17,", 0) == 0);
}

TEST_CASE("verify report serialization") {
  SumFreeCollection c;
  c.mode = CollectionMode::integer_vectors;
  c.m = 2;
  c.k = 3;
  c.n = 1;
  c.tuples = {{{1}, {1}, {1}}};
  const nlohmann::json j = to_json(verify_sumfree(c));
  CHECK(j["ok"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["kind"] == "diagonal");
}
