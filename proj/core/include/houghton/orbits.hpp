#pragma once

#include "houghton/element.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace houghton {

// Cycles of the ray permutation. Each class lists its rays starting at the
// smallest one and following sigma; classes are ordered by that smallest ray.
struct ClassPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> sizes;
  std::vector<Int> classTranslation;
  std::vector<int> classOf;  // ray -> class index; entry 0 unused

  int class_count() const { return static_cast<int>(classes.size()); }
  const std::vector<int>& class_of_ray(int ray) const { return classes[classOf[ray]]; }
};

ClassPartition class_partition(const Element& g);

struct RaySets {
  std::vector<int> I;   // rays whose class translation is nonzero
  std::vector<int> Ic;  // the rest
};

RaySets infinite_ray_set(const Element& g);

// Smallest heights beyond which iterating g up to |[i]| times follows the
// tail formula.
std::vector<Int> refined_cuts(const Element& g);

// {(ray, m) : m >= minDepth, m = residue mod modulus}
struct ProgressionSet {
  int ray = 1;
  Int residue = 0;
  Int modulus = 1;
  Int minDepth = 1;

  bool contains(const Point& p) const;
  friend bool operator==(const ProgressionSet& a, const ProgressionSet& b) {
    return a.ray == b.ray && a.residue == b.residue && a.modulus == b.modulus &&
           a.minDepth == b.minDepth;
  }
};

struct OrbitDescriptor {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  std::vector<Point> points;                // finite: cycle, starting at its least point
  std::vector<ProgressionSet> forward;      // infinite: limit of g^k, k -> +inf
  std::vector<ProgressionSet> backward;     // infinite: limit of g^-k
  std::vector<Point> exceptional;           // infinite: orbit points outside both bundles
  int forwardClass = -1;                    // class indices into class_partition(g)
  int backwardClass = -1;

  bool is_finite() const { return kind == Kind::Finite; }
  bool contains(const Point& p) const;
};

// Orbit bookkeeping shared by the decision procedures. Holds g, g^-1, the class
// data and the far-out thresholds; caches per-point classifications.
class OrbitAnalyzer {
 public:
  explicit OrbitAnalyzer(const Element& g);

  const Element& element() const { return g_; }
  const Element& inverse() const { return ginv_; }
  const ClassPartition& classes() const { return cp_; }
  const std::vector<Int>& cuts() const { return zf_; }          // refined cuts of g
  const std::vector<Int>& inverse_cuts() const { return zb_; }  // refined cuts of g^-1

  bool class_in_I(int c) const { return cp_.classTranslation[c] != 0; }
  bool ray_in_I(int ray) const { return class_in_I(cp_.classOf[ray]); }

  // Points at or beyond these depths are "far": forward (resp. backward)
  // iteration never re-enters the head region.
  const Int& forward_threshold(int ray) const { return fwd_th_[ray - 1]; }
  const Int& backward_threshold(int ray) const { return bwd_th_[ray - 1]; }
  // Every orbit that is not a far column or a far tail meets {m < region(i)}.
  const Int& region(int ray) const { return region_[ray - 1]; }

  bool far_forward(const Point& p) const;
  bool far_backward(const Point& p) const;

  struct Info {
    bool infinite = false;
    long length = 0;  // finite orbits only
    int forwardClass = -1, backwardClass = -1;
    int id = -1;  // distinct orbits get distinct ids
  };
  const Info& classify(const Point& p);

  // First far-forward point on the forward trajectory of p (infinite orbits).
  Point forward_anchor(const Point& p) const;
  Point backward_anchor(const Point& p) const;

  OrbitDescriptor describe(const Point& p);

  // Finite orbits of g meeting the region, each listed once, in order of
  // their least points.
  std::vector<std::vector<Point>> finite_orbits_in_region();

  // One far point per infinite orbit (on the first ray of each class with
  // positive translation, one per residue).
  std::vector<Point> infinite_orbit_representatives() const;

 private:
  std::size_t step_cap(const Point& p) const;
  int infinite_orbit_id(const Point& far);

  Element g_, ginv_;
  ClassPartition cp_;
  std::vector<Int> zf_, zb_;
  std::vector<Int> fwd_th_, bwd_th_, region_;
  std::map<Point, Info> cache_;
  std::map<Point, int> orbit_ids_;
  int next_id_ = 0;
};

OrbitDescriptor orbit_of(const Element& g, const Point& p);

// Components of the relation generated by "two classes share an infinite
// orbit", as lists of class indices; sorted by least ray.
std::vector<std::vector<int>> class_relation(const Element& g);

// Keeps the action of g on selected orbits and fixes everything else. The
// predicate sees each orbit's classification; classes selected by
// `keep_class` must be exactly the classes whose far-out points are kept.
Element restrict_to_orbits(const Element& g, const std::vector<bool>& keep_class,
                           const std::function<bool(const OrbitAnalyzer::Info&)>& keep_orbit);

Element r_part(const Element& g, long r);
Element infinite_part(const Element& g);

// Distinct finite cycle lengths of g (head-region cycles and far columns).
std::vector<long> finite_cycle_lengths(const Element& g);

}  // namespace houghton
