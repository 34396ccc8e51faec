#include "houghton/orbits.hpp"

#include "houghton/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace houghton {

ClassPartition class_partition(const Element& g) {
  const int n = g.n();
  ClassPartition cp;
  cp.classOf.assign(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    if (cp.classOf[i] >= 0) continue;
    std::vector<int> cls;
    Int tr = 0;
    for (int j = i; cp.classOf[j] < 0; j = g.sigma()(j)) {
      cp.classOf[j] = cp.class_count();
      cls.push_back(j);
      tr += g.t(j);
    }
    cp.sizes.push_back(static_cast<int>(cls.size()));
    cp.classTranslation.push_back(tr);
    cp.classes.push_back(std::move(cls));
  }
  return cp;
}

RaySets infinite_ray_set(const Element& g) {
  ClassPartition cp = class_partition(g);
  RaySets rs;
  for (int i = 1; i <= g.n(); ++i) {
    if (cp.classTranslation[cp.classOf[i]] != 0)
      rs.I.push_back(i);
    else
      rs.Ic.push_back(i);
  }
  return rs;
}

// Does (i,m) follow the tail formula for 1..q iterations?
static bool follows_formula(const Element& g, const std::vector<int>& chain, std::size_t start,
                            const Int& m) {
  const std::size_t q = chain.size();
  Point cur(chain[start], m);
  Int expect = m;
  for (std::size_t d = 1; d <= q; ++d) {
    const int from = chain[(start + d - 1) % q];
    expect += g.t(from);
    cur = g.evaluate(cur);
    if (cur.ray != chain[(start + d) % q] || cur.depth != expect) return false;
  }
  return true;
}

std::vector<Int> refined_cuts(const Element& g) {
  const ClassPartition cp = class_partition(g);
  std::vector<Int> out(g.n(), Int(1));
  for (const auto& chain : cp.classes) {
    const std::size_t q = chain.size();
    for (std::size_t s = 0; s < q; ++s) {
      // Beyond `bound` every intermediate point lies in its tail.
      Int bound = 1, partial = 0;
      for (std::size_t d = 0; d < q; ++d) {
        const int ray = chain[(s + d) % q];
        bound = std::max(bound, g.z(ray) - partial);
        partial += g.t(ray);
      }
      Int z = bound;
      while (z > 1 && follows_formula(g, chain, s, z - 1)) --z;
      out[chain[s] - 1] = z;
    }
  }
  return out;
}

bool ProgressionSet::contains(const Point& p) const {
  return p.ray == ray && p.depth >= minDepth && mod_floor(p.depth - residue, modulus) == 0;
}

bool OrbitDescriptor::contains(const Point& p) const {
  if (is_finite()) return std::find(points.begin(), points.end(), p) != points.end();
  for (const auto& b : forward)
    if (b.contains(p)) return true;
  for (const auto& b : backward)
    if (b.contains(p)) return true;
  return std::find(exceptional.begin(), exceptional.end(), p) != exceptional.end();
}

OrbitAnalyzer::OrbitAnalyzer(const Element& g)
    : g_(g), ginv_(invert(g)), cp_(class_partition(g)), zf_(refined_cuts(g)),
      zb_(refined_cuts(ginv_)) {
  const int n = g.n();
  fwd_th_.assign(n, Int(1));
  bwd_th_.assign(n, Int(1));
  region_.assign(n, Int(1));
  for (const auto& chain : cp_.classes) {
    Int zmax_f = 1, zmax_b = 1, spread = 0;
    for (int r : chain) {
      zmax_f = std::max(zmax_f, zf_[r - 1]);
      zmax_b = std::max(zmax_b, zb_[r - 1]);
      spread += abs_int(g.t(r));
    }
    for (int r : chain) {
      fwd_th_[r - 1] = zmax_f + spread;
      bwd_th_[r - 1] = zmax_b + spread;
      region_[r - 1] = std::max(fwd_th_[r - 1], bwd_th_[r - 1]);
    }
  }
}

bool OrbitAnalyzer::far_forward(const Point& p) const {
  return cp_.classTranslation[cp_.classOf[p.ray]] > 0 && p.depth >= fwd_th_[p.ray - 1];
}

bool OrbitAnalyzer::far_backward(const Point& p) const {
  return cp_.classTranslation[cp_.classOf[p.ray]] < 0 && p.depth >= bwd_th_[p.ray - 1];
}

std::size_t OrbitAnalyzer::step_cap(const Point& p) const {
  Int total = 64;
  for (int i = 0; i < g_.n(); ++i) total += 2 * (region_[i] + 1);
  total += (p.depth + 1) * g_.n();
  total *= g_.n();
  if (total > Int(1) << 40) throw ResourceError("orbit walk too long");
  return static_cast<std::size_t>(total);
}

Point OrbitAnalyzer::forward_anchor(const Point& p) const {
  const std::size_t cap = step_cap(p);
  Point cur = p;
  for (std::size_t k = 0; k <= cap; ++k) {
    if (far_forward(cur)) return cur;
    cur = g_.evaluate(cur);
  }
  throw ResourceError("forward orbit walk from " + to_string(p) + " did not escape");
}

Point OrbitAnalyzer::backward_anchor(const Point& p) const {
  const std::size_t cap = step_cap(p);
  Point cur = p;
  for (std::size_t k = 0; k <= cap; ++k) {
    if (far_backward(cur)) return cur;
    cur = ginv_.evaluate(cur);
  }
  throw ResourceError("backward orbit walk from " + to_string(p) + " did not escape");
}

int OrbitAnalyzer::infinite_orbit_id(const Point& far) {
  // Far points of one orbit on the first ray of its class form a single
  // residue class; its least far member names the orbit.
  const int c = cp_.classOf[far.ray];
  const int front = cp_.classes[c].front();
  Point cur = far;
  while (cur.ray != front) cur = g_.evaluate(cur);
  const Int& tr = cp_.classTranslation[c];
  const Int& base = fwd_th_[front - 1];
  const Point rep(front, base + mod_floor(cur.depth - base, tr));
  auto [it, fresh] = orbit_ids_.emplace(rep, next_id_);
  if (fresh) ++next_id_;
  return it->second;
}

const OrbitAnalyzer::Info& OrbitAnalyzer::classify(const Point& p) {
  if (auto it = cache_.find(p); it != cache_.end()) return it->second;
  const std::size_t cap = step_cap(p);
  std::vector<Point> path;
  Point cur = p;
  Info info;
  bool resolved = false;
  for (std::size_t k = 0; k <= cap; ++k) {
    if (auto it = cache_.find(cur); it != cache_.end()) {
      info = it->second;
      resolved = true;
      break;
    }
    if (far_forward(cur)) {
      info.infinite = true;
      info.forwardClass = cp_.classOf[cur.ray];
      info.backwardClass = cp_.classOf[backward_anchor(p).ray];
      info.id = infinite_orbit_id(cur);
      resolved = true;
      break;
    }
    path.push_back(cur);
    cur = g_.evaluate(cur);
    if (cur == p) {
      info.infinite = false;
      info.length = static_cast<long>(path.size());
      info.id = next_id_++;
      resolved = true;
      break;
    }
  }
  if (!resolved) throw ResourceError("orbit of " + to_string(p) + " not resolved");
  for (const Point& q : path) cache_.emplace(q, info);
  return cache_.emplace(p, info).first->second;
}

OrbitDescriptor OrbitAnalyzer::describe(const Point& p) {
  OrbitDescriptor d;
  const Info info = classify(p);
  if (!info.infinite) {
    d.kind = OrbitDescriptor::Kind::Finite;
    Point cur = p;
    do {
      d.points.push_back(cur);
      cur = g_.evaluate(cur);
    } while (cur != p);
    auto least = std::min_element(d.points.begin(), d.points.end());
    std::rotate(d.points.begin(), least, d.points.end());
    return d;
  }
  d.kind = OrbitDescriptor::Kind::Infinite;
  d.forwardClass = info.forwardClass;
  d.backwardClass = info.backwardClass;
  const Point fa = forward_anchor(p);
  const Point ba = backward_anchor(p);

  auto bundle = [&](const Point& anchor, const Element& step, const std::vector<Int>& cuts) {
    std::vector<ProgressionSet> out;
    const Int modulus = abs_int(cp_.classTranslation[cp_.classOf[anchor.ray]]);
    Point cur = anchor;
    const std::size_t q = cp_.class_of_ray(anchor.ray).size();
    for (std::size_t s = 0; s < q; ++s) {
      ProgressionSet ps;
      ps.ray = cur.ray;
      ps.modulus = modulus;
      ps.residue = mod_floor(cur.depth, modulus);
      const Int& z = cuts[cur.ray - 1];
      ps.minDepth = z + mod_floor(ps.residue - z, modulus);
      out.push_back(ps);
      cur = step.evaluate(cur);
    }
    std::sort(out.begin(), out.end(),
              [](const ProgressionSet& a, const ProgressionSet& b) { return a.ray < b.ray; });
    return out;
  };
  d.forward = bundle(fa, g_, zf_);
  d.backward = bundle(ba, ginv_, zb_);

  const std::size_t cap = step_cap(ba);
  Point cur = ba;
  for (std::size_t k = 0;; ++k) {
    if (k > cap) throw ResourceError("orbit segment too long");
    bool inside = false;
    for (const auto& b : d.forward) inside = inside || b.contains(cur);
    for (const auto& b : d.backward) inside = inside || b.contains(cur);
    if (!inside) d.exceptional.push_back(cur);
    if (cur == fa) break;
    cur = g_.evaluate(cur);
  }
  std::sort(d.exceptional.begin(), d.exceptional.end());
  return d;
}

std::vector<std::vector<Point>> OrbitAnalyzer::finite_orbits_in_region() {
  std::vector<std::vector<Point>> out;
  std::set<int> seen;
  for (int i = 1; i <= g_.n(); ++i) {
    for (Int m = 1; m < region_[i - 1]; ++m) {
      const Point p(i, m);
      const Info info = classify(p);
      if (info.infinite || !seen.insert(info.id).second) continue;
      std::vector<Point> cyc;
      Point cur = p;
      do {
        cyc.push_back(cur);
        cur = g_.evaluate(cur);
      } while (cur != p);
      out.push_back(std::move(cyc));
    }
  }
  return out;
}

std::vector<Point> OrbitAnalyzer::infinite_orbit_representatives() const {
  std::vector<Point> reps;
  for (int c = 0; c < cp_.class_count(); ++c) {
    const Int& tr = cp_.classTranslation[c];
    if (tr <= 0) continue;
    const int ray = cp_.classes[c].front();
    const Int& base = fwd_th_[ray - 1];
    for (Int d = 0; d < tr; ++d) reps.emplace_back(ray, base + mod_floor(d - base, tr));
  }
  return reps;
}

OrbitDescriptor orbit_of(const Element& g, const Point& p) {
  check_point(g.n(), p);
  OrbitAnalyzer an(g);
  return an.describe(p);
}

std::vector<std::vector<int>> class_relation(const Element& g) {
  OrbitAnalyzer an(g);
  const ClassPartition& cp = an.classes();
  std::vector<int> parent(cp.class_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Point& rep : an.infinite_orbit_representatives()) {
    const auto& info = an.classify(rep);
    parent[find(info.forwardClass)] = find(info.backwardClass);
  }
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < cp.class_count(); ++c)
    if (an.class_in_I(c)) groups[find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& kv : groups) out.push_back(std::move(kv.second));
  // Class indices follow least rays, so sorting by first entry sorts by least ray.
  std::sort(out.begin(), out.end());
  return out;
}

Element restrict_to_orbits(const Element& g, const std::vector<bool>& keep_class,
                           const std::function<bool(const OrbitAnalyzer::Info&)>& keep_orbit) {
  OrbitAnalyzer an(g);
  const int n = g.n();
  const ClassPartition& cp = an.classes();
  std::vector<int> sigma(n);
  std::vector<Int> t(n), cut(n);
  for (int i = 1; i <= n; ++i) {
    const bool keep = keep_class[cp.classOf[i]];
    sigma[i - 1] = keep ? g.sigma()(i) : i;
    t[i - 1] = keep ? g.t(i) : Int(0);
    cut[i - 1] = an.region(i);
  }
  return Element::from_function(n, RayPermutation(sigma), t, cut, [&](const Point& p) {
    return keep_orbit(an.classify(p)) ? g.evaluate(p) : p;
  });
}

Element r_part(const Element& g, long r) {
  if (r < 1) throw InputError("cycle length must be positive");
  const ClassPartition cp = class_partition(g);
  std::vector<bool> keep(cp.class_count());
  for (int c = 0; c < cp.class_count(); ++c)
    keep[c] = cp.classTranslation[c] == 0 && cp.sizes[c] == r;
  return restrict_to_orbits(g, keep, [r](const OrbitAnalyzer::Info& info) {
    return !info.infinite && info.length == r;
  });
}

Element infinite_part(const Element& g) {
  const ClassPartition cp = class_partition(g);
  std::vector<bool> keep(cp.class_count());
  for (int c = 0; c < cp.class_count(); ++c) keep[c] = cp.classTranslation[c] != 0;
  return restrict_to_orbits(g, keep, [](const OrbitAnalyzer::Info& info) { return info.infinite; });
}

std::vector<long> finite_cycle_lengths(const Element& g) {
  OrbitAnalyzer an(g);
  std::set<long> lens;
  for (const auto& cyc : an.finite_orbits_in_region()) lens.insert(static_cast<long>(cyc.size()));
  const ClassPartition& cp = an.classes();
  for (int c = 0; c < cp.class_count(); ++c)
    if (cp.classTranslation[c] == 0) lens.insert(cp.sizes[c]);
  return {lens.begin(), lens.end()};
}

}  // namespace houghton
