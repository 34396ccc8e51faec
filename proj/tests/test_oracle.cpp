#include "houghton/oracle.hpp"
#include "houghton/word.hpp"

#include <doctest.h>

#include <set>

using namespace houghton;

namespace {

Element E(const std::string& w, int n) { return element_from_text(w, n); }

}  // namespace

TEST_CASE("enumeration counts") {
  SearchBounds zero;
  zero.maxAbsTranslation = 0;
  zero.maxHeadDepth = 1;
  const auto only = enumerate_elements(2, zero);
  CHECK(only.elements.size() == 2);  // identity and the swap of (1,1),(2,1)
  zero.maxHeadDepth = 0;
  const auto id = enumerate_elements(3, zero);
  REQUIRE(id.elements.size() == 1);
  CHECK(id.elements[0].is_identity());

  SearchBounds one;
  one.maxAbsTranslation = 1;
  one.maxHeadDepth = 0;
  const auto tr = enumerate_elements(2, one);
  REQUIRE(tr.elements.size() == 1);
  CHECK(tr.elements[0].is_identity());

  SearchBounds two;
  two.maxAbsTranslation = 0;
  two.maxHeadDepth = 2;
  CHECK(enumerate_elements(2, two).elements.size() == 24);
}

TEST_CASE("enumeration is duplicate free, deterministic and honours bounds") {
  SearchBounds sb;
  sb.maxAbsTranslation = 1;
  sb.maxHeadDepth = 2;
  const auto first = enumerate_elements(2, sb);
  const auto again = enumerate_elements(2, sb);
  CHECK_FALSE(first.truncated);
  REQUIRE(first.elements.size() == again.elements.size());
  std::set<std::string> words;
  for (std::size_t k = 0; k < first.elements.size(); ++k) {
    const Element& e = first.elements[k];
    CHECK(e == again.elements[k]);
    CHECK(words.insert(print_word(word_for_element(e))).second);
    for (int i = 1; i <= 2; ++i) {
      CHECK(abs_int(e.t(i)) <= 1);
      CHECK(e.evaluate(Point(i, 3)) == Point(i, 3 + e.t(i)));
    }
  }
  sb.maxCandidates = 10;
  const auto cut = enumerate_elements(2, sb);
  CHECK(cut.truncated);
  CHECK(cut.elements.size() == 10);
}

TEST_CASE("brute force conjugacy") {
  SearchBounds sb;
  sb.maxAbsTranslation = 1;
  sb.maxHeadDepth = 2;
  const Element g2 = standard_generator(2, 2);
  const OracleVerdict self = brute_force_conjugate(g2, g2, sb);
  REQUIRE(self.kind == OracleVerdict::Kind::Found);
  CHECK(conjugate(g2, *self.witness) == g2);
  const Element a = E("((1,1)(1,2))", 2), b = E("((1,1)(2,1))", 2);
  const OracleVerdict ab = brute_force_conjugate(a, b, sb);
  REQUIRE(ab.kind == OracleVerdict::Kind::Found);
  CHECK(conjugate(a, *ab.witness) == b);
  CHECK(brute_force_conjugate(g2, invert(g2), sb).kind == OracleVerdict::Kind::Exhausted);
  sb.maxCandidates = 3;
  CHECK(brute_force_conjugate(g2, invert(g2), sb).kind == OracleVerdict::Kind::Truncated);
}

TEST_CASE("brute force centralizer") {
  SearchBounds sb;
  sb.maxAbsTranslation = 1;
  sb.maxHeadDepth = 2;
  const auto all = enumerate_elements(2, sb).elements;
  CHECK(brute_force_centralizer(Element::identity(2), sb).size() == all.size());
  const Element t = E("((1,1)(1,2))", 2);
  const auto cent = brute_force_centralizer(t, sb);
  std::size_t expected = 0;
  for (const Element& x : all) {
    const Point p = x.evaluate(Point(1, 1)), q = x.evaluate(Point(1, 2));
    const bool keeps = (p == Point(1, 1) && q == Point(1, 2)) || (p == Point(1, 2) && q == Point(1, 1));
    if (keeps) ++expected;
  }
  CHECK(cent.size() == expected);
  for (const Element& x : cent) CHECK(compose(t, x) == compose(x, t));
}
