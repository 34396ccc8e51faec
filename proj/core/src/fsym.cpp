#include "houghton/fsym.hpp"

#include "houghton/errors.hpp"
#include "houghton/orbits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace houghton {

namespace {

class Budget {
 public:
  explicit Budget(std::size_t cap) : cap_(cap) {}
  void spend(std::size_t k = 1) {
    used_ += k;
    if (used_ > cap_)
      throw ResourceError("FSym conjugator search exceeded " + std::to_string(cap_) +
                          " assignments");
  }

 private:
  std::size_t cap_;
  std::size_t used_ = 0;
};

// Partial injective map under construction. Returns false on a conflict.
bool assign(PointMap& f, std::set<Point>& images, const Point& p, const Point& q) {
  auto it = f.find(p);
  if (it != f.end()) return it->second == q;
  if (!images.insert(q).second) return false;
  f.emplace(p, q);
  return true;
}

// Extends an injective finite partial map to a finitely supported permutation:
// points that are images but not in the domain go, in sorted order, to the
// domain points that are not images.
PointMap complete_partial(const PointMap& f, Budget& budget) {
  std::set<Point> dom, img;
  for (const auto& [p, q] : f) {
    dom.insert(p);
    img.insert(q);
  }
  std::vector<Point> from, to;
  std::set_difference(img.begin(), img.end(), dom.begin(), dom.end(), std::back_inserter(from));
  std::set_difference(dom.begin(), dom.end(), img.begin(), img.end(), std::back_inserter(to));
  if (from.size() != to.size()) throw std::logic_error("partial map is not injective");
  PointMap out = f;
  for (std::size_t k = 0; k < from.size(); ++k) out.emplace(from[k], to[k]);
  budget.spend(from.size());
  for (auto it = out.begin(); it != out.end();) {
    if (it->first == it->second)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

bool same_tails(const Element& g, const Element& h) {
  return g.n() == h.n() && g.sigma() == h.sigma() && g.t() == h.t();
}

std::vector<Int> max_bounds(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

// Points of {m < bound_i} where g and h differ.
std::vector<Point> disagreement(const Element& g, const Element& h,
                                const std::vector<Int>& bound) {
  std::vector<Point> out;
  for (int i = 1; i <= g.n(); ++i)
    for (Int m = 1; m < bound[i - 1]; ++m) {
      const Point p(i, m);
      if (g.evaluate(p) != h.evaluate(p)) out.push_back(p);
    }
  return out;
}

// r-cycles of an element whose finite orbits all have length r, restricted to
// those meeting `pts`; each starts at its least point, sorted by it.
std::vector<std::vector<Point>> cycles_through(OrbitAnalyzer& an, const std::vector<Point>& pts,
                                               long r) {
  std::vector<std::vector<Point>> out;
  std::set<int> seen;
  for (const Point& p : pts) {
    const auto& info = an.classify(p);
    if (info.infinite || info.length != r || !seen.insert(info.id).second) continue;
    out.push_back(an.describe(p).points);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// Matches r-cycles of g and h that meet their disagreement set. Returns the
// partial map (cycle points only) or nothing when the counts differ.
std::optional<PointMap> match_cycles(const Element& g, const Element& h, long r,
                                     const std::vector<Point>& diff, Budget& budget) {
  OrbitAnalyzer ag(g), ah(h);
  const auto A = cycles_through(ag, diff, r);
  const auto B = cycles_through(ah, diff, r);
  if (A.size() != B.size()) return std::nullopt;
  PointMap f;
  std::set<Point> images;
  for (std::size_t k = 0; k < A.size(); ++k) {
    for (long s = 0; s < r; ++s) {
      budget.spend();
      if (!assign(f, images, A[k][s], B[k][s])) return std::nullopt;
    }
  }
  return f;
}

}  // namespace

FiniteRegion fsym_region(const Element& g, const Element& h, long r) {
  if (g.n() != h.n()) throw InputError("arity mismatch");
  const Element gr = r == 0 ? infinite_part(g) : r_part(g, r);
  const Element hr = r == 0 ? infinite_part(h) : r_part(h, r);
  return FiniteRegion{max_bounds(gr.z(), hr.z())};
}

bool fsym_precheck(const Element& g, const Element& h) {
  if (g.n() != h.n()) return false;
  for (int i = 1; i <= g.n(); ++i) {
    const bool gm = g.sigma()(i) != i || g.t(i) != 0;
    const bool hm = h.sigma()(i) != i || h.t(i) != 0;
    if (gm != hm) return false;
  }
  const std::vector<Int> bound = max_bounds(g.z(), h.z());
  long only_g = 0, only_h = 0;
  for (int i = 1; i <= g.n(); ++i)
    for (Int m = 1; m < bound[i - 1]; ++m) {
      const Point p(i, m);
      const bool gm = g.evaluate(p) != p;
      const bool hm = h.evaluate(p) != p;
      if (gm && !hm) ++only_g;
      if (hm && !gm) ++only_h;
    }
  return only_g == only_h;
}

std::optional<Element> conjugate_r_parts(const Element& g, const Element& h, long r,
                                         const FsymOptions& opts) {
  if (r < 1) throw InputError("cycle length must be positive");
  const Element gr = r_part(g, r);
  const Element hr = r_part(h, r);
  if (!same_tails(gr, hr)) return std::nullopt;
  if (gr == hr) return Element::identity(g.n());
  Budget budget(opts.maxAssignments);
  const auto diff = disagreement(gr, hr, max_bounds(gr.z(), hr.z()));
  auto f = match_cycles(gr, hr, r, diff, budget);
  if (!f) return std::nullopt;
  const Element x = finite_permutation(g.n(), complete_partial(*f, budget));
  if (conjugate(gr, x) != hr) throw std::logic_error("r-part conjugator failed verification");
  return x;
}

std::optional<Element> conjugate_infinite_parts(const Element& g, const Element& h,
                                                const FsymOptions& opts) {
  const Element gi = infinite_part(g);
  const Element hi = infinite_part(h);
  if (!same_tails(gi, hi)) return std::nullopt;
  if (gi == hi) return Element::identity(g.n());
  Budget budget(opts.maxAssignments);
  OrbitAnalyzer ag(gi), ah(hi);
  const int n = g.n();
  const ClassPartition& cp = ag.classes();

  // Beyond these depths both elements follow the same tail and neither walk
  // re-enters a head region.
  std::vector<Int> fwd(n), bwd(n), bound(n);
  for (const auto& chain : cp.classes) {
    Int zc = 1, spread = 0;
    for (int r : chain) {
      zc = std::max({zc, gi.z(r), hi.z(r), ag.region(r), ah.region(r)});
      spread += abs_int(gi.t(r));
    }
    for (int r : chain) {
      bound[r - 1] = zc;
      fwd[r - 1] = bwd[r - 1] = zc + spread;
    }
  }
  auto far_fwd = [&](const Point& p) {
    return cp.classTranslation[cp.classOf[p.ray]] > 0 && p.depth >= fwd[p.ray - 1];
  };
  auto far_bwd = [&](const Point& p) {
    return cp.classTranslation[cp.classOf[p.ray]] < 0 && p.depth >= bwd[p.ray - 1];
  };

  PointMap f;
  std::set<Point> images;
  std::set<int> done_g, done_h;
  const std::size_t walk_cap = 1u << 26;
  for (const Point& p : disagreement(gi, hi, bound)) {
    for (OrbitAnalyzer* an : {&ag, &ah}) {
      const auto& info = an->classify(p);
      if (!info.infinite) continue;
      if (!(an == &ag ? done_g : done_h).insert(info.id).second) continue;
      // The conjugator is the identity far out, so on the orbit through p it
      // is forced: f(q g^-k) = q h^-k for a far-forward point q.
      const Element& step = an->element();
      Point q = p;
      for (std::size_t k = 0; !far_fwd(q); ++k) {
        if (k > walk_cap) throw ResourceError("orbit walk too long");
        q = step.evaluate(q);
      }
      Point u = q, w = q;
      const Element& gi_inv = ag.inverse();
      const Element& hi_inv = ah.inverse();
      for (std::size_t k = 0;; ++k) {
        if (k > walk_cap) throw ResourceError("orbit walk too long");
        budget.spend();
        if (!assign(f, images, u, w)) return std::nullopt;
        if (far_bwd(u) && far_bwd(w)) {
          if (u != w) return std::nullopt;
          break;
        }
        u = gi_inv.evaluate(u);
        w = hi_inv.evaluate(w);
      }
    }
  }
  const Element x = finite_permutation(n, complete_partial(f, budget));
  if (conjugate(gi, x) != hi) return std::nullopt;
  return x;
}

std::optional<Element> conjugate_in_fsym(const Element& g, const Element& h,
                                         const FsymOptions& opts) {
  if (!same_tails(g, h)) return std::nullopt;
  if (g == h) return Element::identity(g.n());
  if (!fsym_precheck(g, h)) return std::nullopt;
  const auto y1 = conjugate_infinite_parts(g, h, opts);
  if (!y1) return std::nullopt;
  const Element g1 = conjugate(g, *y1);
  if (g1 == h) return *y1;

  Budget budget(opts.maxAssignments);
  std::set<long> lengths;
  for (long r : finite_cycle_lengths(g1)) lengths.insert(r);
  for (long r : finite_cycle_lengths(h)) lengths.insert(r);

  // On the union of the finite orbits, glue the r-part matchings; fixed
  // points absorb the rest.
  PointMap f;
  std::set<Point> images;
  for (long r : lengths) {
    if (r < 2) continue;
    const Element gr = r_part(g1, r);
    const Element hr = r_part(h, r);
    if (!same_tails(gr, hr)) return std::nullopt;
    if (gr == hr) continue;
    const auto diff = disagreement(gr, hr, max_bounds(gr.z(), hr.z()));
    auto fr = match_cycles(gr, hr, r, diff, budget);
    if (!fr) return std::nullopt;
    for (const auto& [p, q] : *fr)
      if (!assign(f, images, p, q)) return std::nullopt;
  }
  const Element y2 = finite_permutation(g.n(), complete_partial(f, budget));
  const Element x = compose(*y1, y2);
  if (conjugate(g, x) != h) return std::nullopt;
  return x;
}

}  // namespace houghton
