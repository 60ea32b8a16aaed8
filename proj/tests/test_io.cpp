#include "doctest.h"

#include "dormant/errors.hpp"
#include "dormant/io.hpp"

using namespace dormant;

TEST_SUITE("cli-io") {

TEST_CASE("ntable file round-trips exactly") {
  for (uint32_t p : {5u, 7u, 11u}) {
    NTable table = enumerate_dormant_sl2(p).table;
    Json doc = ntable_to_json(table, "enumerate-sl2");
    NTable back = ntable_from_json(doc);
    CHECK(back == table);
    CHECK(ntable_to_json(back, "enumerate-sl2").dump(2) == doc.dump(2));
  }
}

TEST_CASE("malformed ntable documents are rejected") {
  Json good = ntable_to_json(enumerate_dormant_sl2(5).table, "t");
  CHECK_NOTHROW(ntable_from_json(good));

  Json unsorted = good;
  unsorted["N"][0]["triple"] = Json::array({2, 1, 1});
  CHECK_THROWS_AS(ntable_from_json(unsorted), PreconditionViolated);

  Json negative = good;
  negative["N"][0]["count"] = -1;
  CHECK_THROWS_AS(ntable_from_json(negative), PreconditionViolated);

  Json duplicate = good;
  duplicate["N"].push_back(good["N"][0]);
  CHECK_THROWS_AS(ntable_from_json(duplicate), PreconditionViolated);

  Json missing = good;
  missing.erase("labels");
  CHECK_THROWS_AS(ntable_from_json(missing), PreconditionViolated);

  Json bad_prime = good;
  bad_prime["p"] = 9;
  CHECK_THROWS_AS(ntable_from_json(bad_prime), PreconditionViolated);
}

TEST_CASE("argument parsers") {
  Polynomial f = parse_polynomial(7, "1,0,3");
  CHECK(f.degree() == 2);
  CHECK(polynomial_to_json(f) == Json::array({1, 0, 3}));
  CHECK(parse_polynomial(7, "").is_zero());
  CHECK(parse_potentials(7, "1/0,1").size() == 2);
  CHECK(parse_int_list("1,2,3") == std::vector<int>{1, 2, 3});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_polynomial(7, "1,x"), PreconditionViolated);
}

}
