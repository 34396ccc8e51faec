#include "houghton/errors.hpp"
#include "houghton/json_io.hpp"
#include "houghton/word.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace houghton;

TEST_CASE("element JSON schema and round trip") {
  const Element g = element_from_text("g2 g2", 2);
  const Json j = element_to_json(g);
  CHECK(j.dump() ==
        R"({"n":2,"sigma":[1,2],"t":[2,-2],"z":[1,3],"head":[[[2,1],[1,2]],[[2,2],[1,1]]]})");
  CHECK(element_from_json(j) == g);

  std::mt19937 rng(83);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + it % 3;
    Element a = testing::random_element(rng, n, 6, 5);
    if (it % 3 == 0) a = compose(a, element_from_text(n == 2 ? "r[2,1]" : "r[2,1,3]", n));
    CHECK(element_from_json(Json::parse(element_to_json(a).dump())) == a);
  }
}

TEST_CASE("big values are strings") {
  const Int far("99999999999999999999");
  CHECK(int_to_json(far) == "99999999999999999999");
  CHECK(int_to_json(Int(-5)) == -5);
  CHECK(int_from_json(Json::parse(int_to_json(far).dump())) == far);
  const Json p = point_to_json(Point(2, far));
  CHECK(p.dump() == R"([2,"99999999999999999999"])");
  CHECK(point_from_json(p) == Point(2, far));
  CHECK_THROWS_AS(int_from_json(Json::parse("1.5")), InputError);
}

TEST_CASE("malformed and non-canonical element JSON is rejected") {
  CHECK_THROWS_AS(element_from_json(Json::parse("[]")), InputError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":2})")), InputError);
  // Head entry that the tail already covers: not canonical.
  CHECK_THROWS_AS(element_from_json(Json::parse(
                      R"({"n":2,"sigma":[1,2],"t":[0,0],"z":[2,1],"head":[[[1,1],[1,1]]]})")),
                  InputError);
  // Not a bijection.
  CHECK_THROWS_AS(element_from_json(Json::parse(
                      R"({"n":2,"sigma":[1,2],"t":[0,0],"z":[2,1],"head":[[[1,1],[2,1]]]})")),
                  InputError);
  CHECK_THROWS_AS(element_from_json(Json::parse(
                      R"({"n":2,"sigma":[1,1],"t":[0,0],"z":[1,1],"head":[]})")),
                  InputError);
}

TEST_CASE("orbit and decision JSON") {
  const Json fin = orbit_to_json(orbit_of(element_from_text("((1,1)(1,2))", 2), Point(1, 2)));
  CHECK(fin.dump() == R"({"kind":"finite","points":[[1,1],[1,2]]})");
  const Json inf = orbit_to_json(orbit_of(standard_generator(2, 2), Point(1, 1)));
  CHECK(inf["kind"] == "infinite");
  CHECK(inf["forward"][0].dump() == R"({"ray":1,"residue":0,"modulus":1,"minDepth":1})");
  CHECK(inf["exceptional"].empty());

  const Decision no = conjugate_in_hn(standard_generator(2, 2), element_from_text("g2^2", 2));
  const Json dj = decision_to_json(no);
  CHECK(dj["conjugate"] == false);
  CHECK(dj["witness"].is_null());
  CHECK(dj["rayPerm"].is_null());
  CHECK(dj["stats"]["candidatesTried"] == 0);
  const Element b = conjugate(standard_generator(2, 2), element_from_text("((1,1)(2,1))", 2));
  const Json yes = decision_to_json(conjugate_in_hn(standard_generator(2, 2), b));
  CHECK(yes["conjugate"] == true);
  CHECK(conjugate(standard_generator(2, 2), element_from_json(yes["witness"])) == b);
}
