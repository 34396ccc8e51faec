#pragma once

#include "houghton/element.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace houghton {

struct SearchBounds {
  long maxAbsTranslation = 1;  // |t_i| <= this
  long maxHeadDepth = 1;       // the element is a translation beyond this depth
  std::size_t maxCandidates = 1000000;
};

// Calls `visit` on every element of H_n in the bounded space, in a fixed
// order: translation vectors lexicographically, then head bijections in
// lexicographic order. Stops early when `visit` returns false. Returns true
// when the space was cut short by maxCandidates.
bool for_each_element(int n, const SearchBounds& bounds,
                      const std::function<bool(const Element&)>& visit);

struct Enumeration {
  std::vector<Element> elements;
  bool truncated = false;
};

Enumeration enumerate_elements(int n, const SearchBounds& bounds);

struct OracleVerdict {
  enum class Kind { Found, Exhausted, Truncated };
  Kind kind = Kind::Exhausted;
  std::optional<Element> witness;
  std::size_t examined = 0;
};

// First x in enumeration order with x^-1 a x = b.
OracleVerdict brute_force_conjugate(const Element& a, const Element& b, const SearchBounds& bounds);

// All bounded x commuting with a.
std::vector<Element> brute_force_centralizer(const Element& a, const SearchBounds& bounds);

}  // namespace houghton
