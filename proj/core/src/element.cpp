#include "houghton/element.hpp"

#include "houghton/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace houghton {

bool operator==(const Point& a, const Point& b) { return a.ray == b.ray && a.depth == b.depth; }
bool operator!=(const Point& a, const Point& b) { return !(a == b); }
bool operator<(const Point& a, const Point& b) {
  if (a.ray != b.ray) return a.ray < b.ray;
  return a.depth < b.depth;
}

std::string to_string(const Point& p) {
  return "(" + std::to_string(p.ray) + "," + p.depth.str() + ")";
}

RayPermutation::RayPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw InputError("ray images do not form a permutation");
    seen[v] = true;
  }
}

RayPermutation RayPermutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return RayPermutation(std::move(im));
}

bool RayPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

RayPermutation RayPermutation::then(const RayPermutation& other) const {
  std::vector<int> im(n());
  for (int i = 1; i <= n(); ++i) im[i - 1] = other((*this)(i));
  return RayPermutation(std::move(im));
}

RayPermutation RayPermutation::inverse() const {
  std::vector<int> im(n());
  for (int i = 1; i <= n(); ++i) im[(*this)(i) - 1] = i;
  return RayPermutation(std::move(im));
}

long RayPermutation::order() const {
  long ord = 1;
  std::vector<bool> seen(n() + 1, false);
  for (int i = 1; i <= n(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (int j = i; !seen[j]; j = (*this)(j)) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

void check_point(int n, const Point& p) {
  if (p.ray < 1 || p.ray > n)
    throw InputError("ray index " + std::to_string(p.ray) + " out of range 1.." + std::to_string(n));
  if (p.depth < 1) throw InputError("depth must be positive in " + to_string(p));
}

Element::Element()
    : n_(2), sigma_(RayPermutation::identity(2)), t_(2, Int(0)), z_(2, Int(1)) {}

Element Element::identity(int n) {
  if (n < 2) throw InputError("arity must be at least 2");
  Element e;
  e.n_ = n;
  e.sigma_ = RayPermutation::identity(n);
  e.t_.assign(n, Int(0));
  e.z_.assign(n, Int(1));
  return e;
}

Element Element::from_function(int n, const RayPermutation& sigma, std::vector<Int> t,
                               std::vector<Int> cut,
                               const std::function<Point(const Point&)>& f) {
  if (n < 2) throw InputError("arity must be at least 2");
  if (sigma.n() != n || static_cast<int>(t.size()) != n || static_cast<int>(cut.size()) != n)
    throw InputError("element data has wrong arity");
  Int total = 0;
  for (const Int& v : t) total += v;
  if (total != 0) throw InputError("translations do not sum to zero");

  Element e;
  e.n_ = n;
  e.sigma_ = sigma;
  e.t_ = std::move(t);
  e.z_ = std::move(cut);
  for (int i = 1; i <= n; ++i) {
    if (e.z_[i - 1] < 1) e.z_[i - 1] = 1;
    // Tail images must have positive depth.
    if (e.z_[i - 1] + e.t_[i - 1] < 1) e.z_[i - 1] = 1 - e.t_[i - 1];
  }
  for (int i = 1; i <= n; ++i) {
    for (Int m = 1; m < e.z_[i - 1]; ++m) {
      Point p(i, m);
      Point q = f(p);
      check_point(n, q);
      e.head_.emplace_hint(e.head_.end(), std::move(p), std::move(q));
    }
  }
  // Lower each cut while the last head entry already follows the tail formula.
  for (int i = 1; i <= n; ++i) {
    Int& z = e.z_[i - 1];
    const int img = sigma(i);
    while (z > 1) {
      auto it = e.head_.find(Point(i, z - 1));
      const Int tail_depth = z - 1 + e.t_[i - 1];
      if (tail_depth < 1 || it->second.ray != img || it->second.depth != tail_depth) break;
      e.head_.erase(it);
      --z;
    }
  }
  // Bijectivity: head images are distinct and fill the complement of the tails.
  RayPermutation inv = sigma.inverse();
  std::set<Point> images;
  for (const auto& [p, q] : e.head_) {
    const int src = inv(q.ray);
    if (q.depth >= e.z_[src - 1] + e.t_[src - 1])
      throw InputError("head image " + to_string(q) + " collides with a tail");
    if (!images.insert(q).second) throw InputError("head image " + to_string(q) + " repeated");
  }
  return e;
}

Element Element::from_table(int n, const RayPermutation& sigma, std::vector<Int> t,
                            std::vector<Int> cut, const PointMap& table) {
  return from_function(n, sigma, std::move(t), std::move(cut), [&](const Point& p) {
    auto it = table.find(p);
    if (it == table.end()) throw InputError("head table misses " + to_string(p));
    return it->second;
  });
}

Point Element::evaluate(const Point& p) const {
  if (p.depth < z_[p.ray - 1]) return head_.at(p);
  return Point(sigma_(p.ray), p.depth + t_[p.ray - 1]);
}

bool Element::in_fsym() const {
  if (!sigma_.is_identity()) return false;
  for (const Int& v : t_)
    if (v != 0) return false;
  return true;
}

bool Element::is_identity() const { return in_fsym() && head_.empty(); }

Int Element::max_depth() const {
  Int m = 1;
  for (const Int& z : z_) m = std::max(m, z);
  for (const auto& kv : head_) m = std::max(m, kv.second.depth);
  return m;
}

bool operator==(const Element& a, const Element& b) {
  return a.n_ == b.n_ && a.sigma_ == b.sigma_ && a.t_ == b.t_ && a.z_ == b.z_ &&
         a.head_ == b.head_;
}

Element standard_generator(int n, int i) {
  if (n < 2) throw InputError("arity must be at least 2");
  if (i < 2 || i > n)
    throw InputError("generator index " + std::to_string(i) + " out of range 2.." + std::to_string(n));
  std::vector<Int> t(n, Int(0));
  t[0] = 1;
  t[i - 1] = -1;
  std::vector<Int> cut(n, Int(1));
  cut[i - 1] = 2;
  return Element::from_function(n, RayPermutation::identity(n), t, cut,
                                [](const Point&) { return Point(1, 1); });
}

Element ray_permutation_element(const RayPermutation& s) {
  const int n = s.n();
  return Element::from_function(n, s, std::vector<Int>(n, Int(0)), std::vector<Int>(n, Int(1)),
                                [](const Point& p) { return p; });
}

Element transposition(int n, const Point& p, const Point& q) {
  check_point(n, p);
  check_point(n, q);
  if (p == q) throw InputError("transposition of a point with itself");
  PointMap m{{p, q}, {q, p}};
  return finite_permutation(n, m);
}

Element finite_permutation(int n, const PointMap& moves) {
  std::vector<Int> cut(n, Int(1));
  for (const auto& [p, q] : moves) {
    check_point(n, p);
    check_point(n, q);
    cut[p.ray - 1] = std::max(cut[p.ray - 1], p.depth + 1);
    cut[q.ray - 1] = std::max(cut[q.ray - 1], q.depth + 1);
  }
  return Element::from_function(n, RayPermutation::identity(n), std::vector<Int>(n, Int(0)), cut,
                                [&](const Point& p) {
                                  auto it = moves.find(p);
                                  return it == moves.end() ? p : it->second;
                                });
}

Point evaluate(const Element& g, const Point& p) {
  check_point(g.n(), p);
  return g.evaluate(p);
}

static void require_same_arity(const Element& g, const Element& h) {
  if (g.n() != h.n()) throw InputError("arity mismatch");
}

Element compose(const Element& g, const Element& h) {
  require_same_arity(g, h);
  const int n = g.n();
  std::vector<Int> t(n), cut(n);
  for (int i = 1; i <= n; ++i) {
    const int j = g.sigma()(i);
    t[i - 1] = g.t(i) + h.t(j);
    cut[i - 1] = std::max(g.z(i), h.z(j) - g.t(i));
  }
  return Element::from_function(n, g.sigma().then(h.sigma()), std::move(t), std::move(cut),
                                [&](const Point& p) { return h.evaluate(g.evaluate(p)); });
}

Element invert(const Element& g) {
  const int n = g.n();
  std::vector<Int> t(n), cut(n);
  for (int i = 1; i <= n; ++i) {
    const int j = g.sigma()(i);
    t[j - 1] = -g.t(i);
    cut[j - 1] = g.z(i) + g.t(i);
  }
  PointMap inv;
  for (const auto& [p, q] : g.head()) inv.emplace(q, p);
  return Element::from_table(n, g.sigma().inverse(), std::move(t), std::move(cut), inv);
}

Element power(const Element& g, const Int& e) {
  Element base = e < 0 ? invert(g) : g;
  Int k = abs_int(e);
  Element acc = Element::identity(g.n());
  while (k > 0) {
    if ((k & 1) != 0) acc = compose(acc, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return acc;
}

bool equal(const Element& g, const Element& h) {
  require_same_arity(g, h);
  return g == h;
}

Element conjugate(const Element& a, const Element& x) { return compose(compose(invert(x), a), x); }

Element commutator(const Element& g, const Element& h) {
  return compose(compose(invert(g), invert(h)), compose(g, h));
}

std::vector<Point> moved_head_points(const Element& g) {
  std::vector<Point> out;
  for (const auto& [p, q] : g.head())
    if (p != q) out.push_back(p);
  return out;
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace houghton
