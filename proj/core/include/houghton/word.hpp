#pragma once

#include "houghton/element.hpp"

#include <string>
#include <variant>
#include <vector>

namespace houghton {

struct StandardGen {
  int index;
  Int exponent;
};
struct PointTransposition {
  Point p, q;
};
struct RayPerm {
  RayPermutation perm;
  Int exponent;
};

using Letter = std::variant<StandardGen, PointTransposition, RayPerm>;

bool operator==(const Letter& a, const Letter& b);

struct GroupWord {
  int n = 2;
  std::vector<Letter> letters;

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.n == b.n && a.letters == b.letters;
  }
};

// Grammar:  word := term (WS term)* ;  term := gen ("^" int)? ;
//           gen  := "g" int | "r[" int ("," int)* "]" | "((" int "," int ")(" int "," int "))"
// The single token "1" (or an empty string) denotes the empty word.
// Throws InputError with the character offset of the first problem.
GroupWord parse_word(const std::string& text, int n);
std::string print_word(const GroupWord& w);

Element element_from_word(const GroupWord& w);
Element element_from_text(const std::string& text, int n);

// A word for g of the shape  x_t * (transpositions) * r[sigma].
GroupWord word_for_element(const Element& g);

}  // namespace houghton
