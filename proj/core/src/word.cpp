#include "houghton/word.hpp"

#include "houghton/errors.hpp"

#include <cctype>
#include <set>

namespace houghton {

bool operator==(const Letter& a, const Letter& b) {
  if (a.index() != b.index()) return false;
  if (auto* x = std::get_if<StandardGen>(&a)) {
    const auto& y = std::get<StandardGen>(b);
    return x->index == y.index && x->exponent == y.exponent;
  }
  if (auto* x = std::get_if<PointTransposition>(&a)) {
    const auto& y = std::get<PointTransposition>(b);
    return x->p == y.p && x->q == y.q;
  }
  const auto& x = std::get<RayPerm>(a);
  const auto& y = std::get<RayPerm>(b);
  return x.perm == y.perm && x.exponent == y.exponent;
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, int n) : s_(s), n_(n) {}

  GroupWord run() {
    GroupWord w;
    w.n = n_;
    skip_ws();
    if (pos_ == s_.size()) return w;
    if (s_.substr(pos_) == "1" || (s_[pos_] == '1' && trailing_ws_only(pos_ + 1))) return w;
    while (true) {
      w.letters.push_back(term());
      const std::size_t before = pos_;
      skip_ws();
      if (pos_ == s_.size()) break;
      if (pos_ == before) fail("expected whitespace between terms");
    }
    return w;
  }

 private:
  bool trailing_ws_only(std::size_t from) const {
    for (std::size_t k = from; k < s_.size(); ++k)
      if (!std::isspace(static_cast<unsigned char>(s_[k]))) return false;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  Int integer(bool allow_sign) {
    const std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    return parse_int(s_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::size_t at = pos_;
    Int v = integer(false);
    if (v > 1000000) {
      pos_ = at;
      fail("index too large");
    }
    return static_cast<int>(v);
  }

  Point point() {
    expect('(');
    const std::size_t at = pos_;
    int ray = small_int();
    expect(',');
    Int depth = integer(false);
    expect(')');
    if (ray < 1 || ray > n_ || depth < 1) {
      pos_ = at;
      fail("point out of range for arity " + std::to_string(n_));
    }
    return Point(ray, depth);
  }

  Int exponent() {
    if (!peek('^')) return 1;
    ++pos_;
    const std::size_t at = pos_;
    Int e = integer(true);
    if (e == 0) {
      pos_ = at;
      fail("exponent must be nonzero");
    }
    return e;
  }

  Letter term() {
    const std::size_t at = pos_;
    if (peek('g')) {
      ++pos_;
      int i = small_int();
      if (i < 2 || i > n_) {
        pos_ = at;
        fail("generator g" + std::to_string(i) + " needs 2 <= i <= " + std::to_string(n_));
      }
      return StandardGen{i, exponent()};
    }
    if (peek('r')) {
      ++pos_;
      expect('[');
      std::vector<int> im{small_int()};
      while (peek(',')) {
        ++pos_;
        im.push_back(small_int());
      }
      expect(']');
      if (static_cast<int>(im.size()) != n_) {
        pos_ = at;
        fail("ray permutation must list " + std::to_string(n_) + " images");
      }
      try {
        RayPermutation perm(im);
        return RayPerm{perm, exponent()};
      } catch (const InputError&) {
        pos_ = at;
        fail("ray images do not form a permutation");
      }
    }
    if (peek('(')) {
      ++pos_;
      Point p = point();
      Point q = point();
      expect(')');
      if (p == q) {
        pos_ = at;
        fail("transposition needs two distinct points");
      }
      if (peek('^')) fail("transpositions take no exponent");
      return PointTransposition{p, q};
    }
    fail("expected 'g', 'r[' or '(('");
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord parse_word(const std::string& text, int n) {
  if (n < 2) throw InputError("arity must be at least 2");
  return Parser(text, n).run();
}

std::string print_word(const GroupWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    if (auto* g = std::get_if<StandardGen>(&l)) {
      out += "g" + std::to_string(g->index);
      if (g->exponent != 1) out += "^" + g->exponent.str();
    } else if (auto* tr = std::get_if<PointTransposition>(&l)) {
      out += "(" + to_string(tr->p) + to_string(tr->q) + ")";
    } else {
      const auto& r = std::get<RayPerm>(l);
      out += "r[";
      for (int i = 1; i <= r.perm.n(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(r.perm(i));
      }
      out += "]";
      if (r.exponent != 1) out += "^" + r.exponent.str();
    }
  }
  return out;
}

Element element_from_word(const GroupWord& w) {
  Element acc = Element::identity(w.n);
  for (const Letter& l : w.letters) {
    if (auto* g = std::get_if<StandardGen>(&l)) {
      acc = compose(acc, power(standard_generator(w.n, g->index), g->exponent));
    } else if (auto* tr = std::get_if<PointTransposition>(&l)) {
      acc = compose(acc, transposition(w.n, tr->p, tr->q));
    } else {
      const auto& r = std::get<RayPerm>(l);
      if (r.perm.n() != w.n) throw InputError("ray permutation arity mismatch");
      acc = compose(acc, power(ray_permutation_element(r.perm), r.exponent));
    }
  }
  return acc;
}

Element element_from_text(const std::string& text, int n) {
  return element_from_word(parse_word(text, n));
}

GroupWord word_for_element(const Element& g) {
  const int n = g.n();
  GroupWord w;
  w.n = n;
  const Element rho = ray_permutation_element(g.sigma());
  const Element h = compose(g, invert(rho));
  // Translation part: prod_{i>=2} g_i^{-t_i} has translation vector t(h).
  Element shift = Element::identity(n);
  for (int i = 2; i <= n; ++i) {
    if (h.t(i) == 0) continue;
    w.letters.push_back(StandardGen{i, -h.t(i)});
    shift = compose(shift, power(standard_generator(n, i), -h.t(i)));
  }
  const Element f = compose(invert(shift), h);
  // Each cycle (p0 p1 ... pk) equals (p0 p1)(p0 p2)...(p0 pk) under right actions.
  std::set<Point> done;
  for (const auto& [p, q] : f.head()) {
    if (p == q || done.count(p)) continue;
    done.insert(p);
    for (Point c = q; c != p; c = f.evaluate(c)) {
      done.insert(c);
      w.letters.push_back(PointTransposition{p, c});
    }
  }
  if (!g.sigma().is_identity()) w.letters.push_back(RayPerm{g.sigma(), 1});
  return w;
}

}  // namespace houghton
