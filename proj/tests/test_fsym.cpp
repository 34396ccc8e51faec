#include "houghton/errors.hpp"
#include "houghton/fsym.hpp"
#include "houghton/oracle.hpp"
#include "houghton/orbits.hpp"
#include "houghton/word.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace houghton;

namespace {

Element E(const std::string& w, int n) { return element_from_text(w, n); }

bool conjugates(const std::optional<Element>& x, const Element& g, const Element& h) {
  return x && x->in_fsym() && conjugate(g, *x) == h;
}

}  // namespace

TEST_CASE("fsym precheck") {
  const Element t = E("((1,1)(1,2))", 2);
  CHECK(fsym_precheck(t, t));
  CHECK_FALSE(fsym_precheck(t, Element::identity(2)));
  CHECK_FALSE(fsym_precheck(standard_generator(3, 2), standard_generator(3, 3)));
  // g2 ((1,1)(1,2)) fixes (1,1); g2 fixes nothing.
  CHECK_FALSE(fsym_precheck(standard_generator(2, 2), E("g2 ((1,1)(1,2))", 2)));
  const Element g2 = standard_generator(2, 2);
  CHECK(fsym_precheck(g2, conjugate(g2, E("((1,1)(2,1))", 2))));
}

TEST_CASE("r-part conjugators") {
  const Element g = E("((1,1)(1,2))", 2);
  const auto same = conjugate_r_parts(g, g, 2);
  REQUIRE(same);
  CHECK(same->is_identity());
  const Element h = E("((1,2)(1,3))", 2);
  const auto x = conjugate_r_parts(g, h, 2);
  REQUIRE(x);
  CHECK(conjugate(r_part(g, 2), *x) == r_part(h, 2));
  const auto fr = fsym_region(g, h, 2);
  for (const Point& p : moved_head_points(*x)) CHECK(fr.contains(p));
  CHECK_FALSE(conjugate_r_parts(g, E("((1,1)(1,2)) ((1,2)(1,3))", 2), 2));
}

TEST_CASE("infinite-part conjugators") {
  const Element g2 = standard_generator(2, 2);
  const auto id = conjugate_infinite_parts(g2, g2);
  REQUIRE(id);
  CHECK(id->is_identity());
  const Element tau = E("((1,1)(2,1))", 2);
  const Element h = conjugate(g2, tau);
  CHECK(conjugates(conjugate_infinite_parts(g2, h), g2, h));
  CHECK_FALSE(conjugate_infinite_parts(g2, E("g2^2", 2)));
}

TEST_CASE("fsym conjugacy examples") {
  std::mt19937 rng(2);
  for (int it = 0; it < 5; ++it) {
    const Element g = testing::random_element(rng, 3, 6, 5);
    const auto x = conjugate_in_fsym(g, g);
    REQUIRE(x);
    CHECK(x->is_identity());
  }
  const Element a = E("((1,1)(1,2))", 2), b = E("((1,1)(2,1))", 2);
  const auto x = conjugate_in_fsym(a, b);
  REQUIRE(conjugates(x, a, b));
  // The conjugator maps the support {(1,1),(1,2)} onto {(1,1),(2,1)}; the
  // smallest such is the transposition of (1,2) and (2,1).
  CHECK(*x == E("((1,2)(2,1))", 2));

  // g2 ((1,1)(1,2)) versus g2: frozen from the bounded oracle below.
  const Element c = E("g2 ((1,1)(1,2))", 2), d = standard_generator(2, 2);
  SearchBounds sb;
  sb.maxAbsTranslation = 0;
  sb.maxHeadDepth = 4;
  const OracleVerdict o = brute_force_conjugate(c, d, sb);
  const auto y = conjugate_in_fsym(c, d);
  CHECK(y.has_value() == (o.kind == OracleVerdict::Kind::Found));
  CHECK_FALSE(y.has_value());
}

TEST_CASE("fsym conjugacy agrees with bounded finitary search") {
  std::mt19937 rng(13);
  SearchBounds sb;
  sb.maxAbsTranslation = 0;
  sb.maxHeadDepth = 3;
  const auto fsym = enumerate_elements(2, sb).elements;
  REQUIRE(fsym.size() == 720);
  int yes = 0;
  for (int it = 0; it < 120; ++it) {
    const Element g = testing::random_element(rng, 2, 5, 3);
    Element h;
    switch (it % 3) {
      case 0: h = conjugate(g, fsym[rng() % fsym.size()]); break;
      case 1: h = testing::random_element(rng, 2, 5, 3); break;
      default: h = compose(conjugate(g, fsym[rng() % fsym.size()]), E("((1,1)(1,2))", 2));
    }
    const auto x = conjugate_in_fsym(g, h);
    if (x) {
      ++yes;
      CHECK(conjugates(x, g, h));
      CHECK(fsym_precheck(g, h));
    }
    const OracleVerdict o = brute_force_conjugate(g, h, sb);
    if (o.kind == OracleVerdict::Kind::Found) CHECK(x.has_value());
    if (!x) CHECK(o.kind != OracleVerdict::Kind::Found);
  }
  CHECK(yes >= 40);
}

TEST_CASE("random conjugates by finitary permutations are found") {
  std::mt19937 rng(17);
  for (int it = 0; it < 150; ++it) {
    const int n = 2 + it % 3;
    Element g = testing::random_element(rng, n, 6, 5);
    if (it % 4 == 0) g = compose(g, E(n == 2 ? "r[2,1]" : n == 3 ? "r[1,3,2]" : "r[2,1,4,3]", n));
    const Element x = testing::random_finitary(rng, n, 1 + it % 4, 6);
    const Element h = conjugate(g, x);
    CHECK(conjugates(conjugate_in_fsym(g, h), g, h));
  }
}

TEST_CASE("assignment budget becomes a resource error") {
  FsymOptions tiny;
  tiny.maxAssignments = 1;
  const Element g = E("g2 ((1,1)(1,3)) ((2,2)(2,4))", 2);
  const Element h = conjugate(g, E("((1,2)(2,5))", 2));
  CHECK_THROWS_AS(conjugate_in_fsym(g, h, tiny), ResourceError);
}
