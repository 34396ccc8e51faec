#pragma once

#include "houghton/integer.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace houghton {

// A point (ray, depth) of X_n; rays are 1-based, depths start at 1.
struct Point {
  int ray = 1;
  Int depth = 1;

  Point() = default;
  Point(int r, Int d) : ray(r), depth(std::move(d)) {}
};

bool operator==(const Point& a, const Point& b);
bool operator!=(const Point& a, const Point& b);
bool operator<(const Point& a, const Point& b);
std::string to_string(const Point& p);

// Isometric permutation of the rays; images are 1-based.
class RayPermutation {
 public:
  RayPermutation() = default;
  explicit RayPermutation(std::vector<int> images);  // throws InputError
  static RayPermutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int ray) const { return images_[ray - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  RayPermutation then(const RayPermutation& other) const;  // apply *this, then other
  RayPermutation inverse() const;
  long order() const;

  friend bool operator==(const RayPermutation& a, const RayPermutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const RayPermutation& a, const RayPermutation& b) { return !(a == b); }
  friend bool operator<(const RayPermutation& a, const RayPermutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

using PointMap = std::map<Point, Point>;

// Canonical normal form of an element of H_n x| S_n:
//   (i,m) -> head(i,m)               for m <  z_i
//   (i,m) -> (sigma(i), m + t_i)     for m >= z_i
// with every z_i minimal.
class Element {
 public:
  Element();  // identity of H_2

  static Element identity(int n);

  // Builds the element that agrees with `f` on {(i,m) : m < cut_i} and with the
  // tail formula elsewhere, then lowers the cuts to canonical form. Throws
  // InputError if the result is not a bijection of X_n.
  static Element from_function(int n, const RayPermutation& sigma, std::vector<Int> t,
                               std::vector<Int> cut,
                               const std::function<Point(const Point&)>& f);
  // Same, reading head values from an explicit table that covers the region.
  static Element from_table(int n, const RayPermutation& sigma, std::vector<Int> t,
                            std::vector<Int> cut, const PointMap& table);

  int n() const { return n_; }
  const RayPermutation& sigma() const { return sigma_; }
  const Int& t(int ray) const { return t_[ray - 1]; }
  const Int& z(int ray) const { return z_[ray - 1]; }
  const std::vector<Int>& t() const { return t_; }
  const std::vector<Int>& z() const { return z_; }
  const PointMap& head() const { return head_; }

  Point evaluate(const Point& p) const;

  bool in_hn() const { return sigma_.is_identity(); }
  bool in_fsym() const;
  bool is_identity() const;

  // Largest depth mentioned by the normal form (cuts and head images).
  Int max_depth() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  int n_ = 2;
  RayPermutation sigma_;
  std::vector<Int> t_;
  std::vector<Int> z_;
  PointMap head_;
};

void check_point(int n, const Point& p);  // throws InputError when out of range

Element standard_generator(int n, int i);
Element ray_permutation_element(const RayPermutation& s);
Element transposition(int n, const Point& p, const Point& q);
// Finitely supported permutation given by an explicit bijection of a finite set.
Element finite_permutation(int n, const PointMap& moves);

Point evaluate(const Element& g, const Point& p);
Element compose(const Element& g, const Element& h);  // first g, then h
Element invert(const Element& g);
Element power(const Element& g, const Int& e);
bool equal(const Element& g, const Element& h);
Element conjugate(const Element& a, const Element& x);  // x^-1 a x
Element commutator(const Element& g, const Element& h);  // g^-1 h^-1 g h

// Points of the head region that are moved (for FSym elements: the support).
std::vector<Point> moved_head_points(const Element& g);

// Sorted, duplicate-free list; used when several routines build point sets.
std::vector<Point> sorted_unique(std::vector<Point> pts);

}  // namespace houghton
