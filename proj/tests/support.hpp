#pragma once

#include "houghton/element.hpp"
#include "houghton/word.hpp"

#include <random>
#include <string>

namespace houghton::testing {

// Random words over g_i^{+-1}, g_i^2 and point transpositions of depth <= maxDepth.
inline std::string random_word(std::mt19937& rng, int n, int letters, int maxDepth) {
  std::string w;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int k = 0; k < letters; ++k) {
    if (!w.empty()) w += ' ';
    if (pick(0, 1) == 0) {
      static const int exps[] = {-1, 1, 2};
      w += "g" + std::to_string(pick(2, n)) + "^" + std::to_string(exps[pick(0, 2)]);
    } else {
      const int r1 = pick(1, n), r2 = pick(1, n);
      const int d1 = pick(1, maxDepth);
      int d2 = pick(1, maxDepth);
      if (r1 == r2 && d1 == d2) d2 = d1 % maxDepth + 1;
      if (r1 == r2 && d1 == d2) {
        w += "g2";
        continue;
      }
      w += "((" + std::to_string(r1) + "," + std::to_string(d1) + ")(" + std::to_string(r2) + "," +
           std::to_string(d2) + "))";
    }
  }
  return w.empty() ? "1" : w;
}

inline Element random_element(std::mt19937& rng, int n, int maxLetters, int maxDepth) {
  const int len = std::uniform_int_distribution<int>(1, maxLetters)(rng);
  return element_from_text(random_word(rng, n, len, maxDepth), n);
}

// Product of `count` random point transpositions of depth <= maxDepth.
inline Element random_finitary(std::mt19937& rng, int n, int count, int maxDepth) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Element x = Element::identity(n);
  for (int k = 0; k < count; ++k) {
    const Point p(pick(1, n), pick(1, maxDepth));
    Point q(pick(1, n), pick(1, maxDepth));
    if (p == q) q = Point(p.ray, p.depth + 1);
    x = compose(x, transposition(n, p, q));
  }
  return x;
}

inline std::string word(const Element& g) { return print_word(word_for_element(g)); }

}  // namespace houghton::testing
