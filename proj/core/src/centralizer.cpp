#include "houghton/centralizer.hpp"

#include "houghton/errors.hpp"
#include "houghton/intlinalg.hpp"
#include "houghton/orbits.hpp"
#include "houghton/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace houghton {

std::vector<Element> CentralizerLatticeGens::elements() const {
  std::vector<Element> out = gammas;
  for (const auto& [r, th] : thetas) out.insert(out.end(), th.begin(), th.end());
  return out;
}

namespace {

constexpr std::size_t kWalkCap = 1u << 24;

// Tries the seed translation s on the first ray of the component. Returns the
// centralizing element or nothing when the propagation is inconsistent.
std::optional<Element> try_gamma_seed(const Element& a, OrbitAnalyzer& an,
                                      const std::vector<int>& component, const Int& s) {
  const ClassPartition& cp = an.classes();
  const Element& ainv = an.inverse();
  const int n = a.n();
  std::vector<std::optional<Int>> shift(cp.class_count());
  std::vector<bool> in_comp(cp.class_count(), false);
  for (int c : component) in_comp[c] = true;

  auto far_here = [&](const Point& p, bool forward) {
    return forward ? an.far_forward(p) : an.far_backward(p);
  };

  // Breadth-first over classes: a known far-out shift on one end of an orbit
  // forces the shift on its other end.
  std::deque<int> queue{component.front()};
  shift[component.front()] = s;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    const Int tau = *shift[c];
    const Int& tr = cp.classTranslation[c];
    const bool positive = tr > 0;
    const int ray = cp.classes[c].front();
    const Element& inward = positive ? ainv : a;
    const Int base = an.region(ray) + abs_int(tau) + abs_int(tr);
    for (Int r = 0; r < abs_int(tr); ++r) {
      Point u(ray, base + r);
      Point w(ray, base + r + tau);
      if (w.depth < 1) return std::nullopt;
      std::size_t k = 0;
      while (!(far_here(u, !positive) && far_here(w, !positive))) {
        if (++k > kWalkCap) throw ResourceError("orbit walk too long");
        u = inward.evaluate(u);
        w = inward.evaluate(w);
      }
      if (u.ray != w.ray) return std::nullopt;
      const int other = cp.classOf[u.ray];
      if (!in_comp[other]) throw std::logic_error("orbit leaves its component");
      const Int t_other = w.depth - u.depth;
      if (shift[other]) {
        if (*shift[other] != t_other) return std::nullopt;
      } else {
        shift[other] = t_other;
        queue.push_back(other);
      }
    }
  }

  std::vector<Int> t(n), cut(n, Int(1));
  for (int i = 1; i <= n; ++i) {
    const int c = cp.classOf[i];
    if (!in_comp[c]) {
      cut[i - 1] = an.region(i);
      continue;
    }
    if (!shift[c]) return std::nullopt;
    t[i - 1] = *shift[c];
    cut[i - 1] = an.region(i) + abs_int(*shift[c]) + abs_int(cp.classTranslation[c]) + 1;
  }
  try {
    const Element gamma = Element::from_function(
        n, RayPermutation::identity(n), t, cut, [&](const Point& p) -> Point {
          const auto& info = an.classify(p);
          if (!info.infinite || !in_comp[info.forwardClass]) return p;
          // Walk forward to a point where gamma is the far-out shift.
          Point q = p;
          std::size_t k = 0;
          while (true) {
            const int c = cp.classOf[q.ray];
            if (an.far_forward(q) && q.depth >= an.region(q.ray) + abs_int(*shift[c])) break;
            if (++k > kWalkCap) throw ResourceError("orbit walk too long");
            q = a.evaluate(q);
          }
          Point w(q.ray, q.depth + *shift[cp.classOf[q.ray]]);
          for (std::size_t j = 0; j < k; ++j) w = ainv.evaluate(w);
          return w;
        });
    if (compose(a, gamma) != compose(gamma, a)) return std::nullopt;
    for (long len : finite_cycle_lengths(gamma))
      if (len > 1) return std::nullopt;
    return gamma;
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

Element gamma_generator(const Element& a, const std::vector<int>& component) {
  if (component.empty()) throw InputError("empty component");
  OrbitAnalyzer an(a);
  const ClassPartition& cp = an.classes();
  for (int c : component)
    if (c < 0 || c >= cp.class_count() || !an.class_in_I(c))
      throw InputError("component must consist of classes with nonzero translation");
  const Int limit = Int(a.sigma().order()) * abs_int(cp.classTranslation[component.front()]);
  for (Int s = 1; s <= limit; ++s)
    if (auto g = try_gamma_seed(a, an, component, s)) return *g;
  throw std::logic_error("no centralizing generator found for component");
}

std::vector<Element> theta_generators(const Element& a, long r) {
  if (r < 1) throw InputError("class size must be positive");
  const ClassPartition cp = class_partition(a);
  std::vector<int> reps;
  for (int c = 0; c < cp.class_count(); ++c)
    if (cp.classTranslation[c] == 0 && cp.sizes[c] == r) reps.push_back(cp.classes[c].front());
  std::vector<Element> out;
  for (std::size_t d = 0; d < reps.size(); ++d)
    for (std::size_t e = d + 1; e < reps.size(); ++e)
      out.push_back(finite_class_shuffle(a, reps[d], reps[e]));
  return out;
}

CentralizerLatticeGens centralizer_translation_lattice(const Element& a) {
  CentralizerLatticeGens out;
  for (const auto& comp : class_relation(a)) out.gammas.push_back(gamma_generator(a, comp));
  const ClassPartition cp = class_partition(a);
  std::vector<long> sizes;
  for (int c = 0; c < cp.class_count(); ++c)
    if (cp.classTranslation[c] == 0) sizes.push_back(cp.sizes[c]);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (long r : sizes) {
    auto th = theta_generators(a, r);
    if (!th.empty()) out.thetas[r] = std::move(th);
  }
  for (const Element& g : out.elements()) out.translationGens.push_back(g.t());
  return out;
}

namespace {

// Permutation acting as a on the listed cycle and fixing everything else.
Element cycle_of(const Element& a, const std::vector<Point>& cyc) {
  PointMap m;
  for (const Point& p : cyc) m.emplace(p, a.evaluate(p));
  return finite_permutation(a.n(), m);
}

// Swaps two cycles of equal length position by position.
Element swap_cycles(int n, const std::vector<Point>& c1, const std::vector<Point>& c2) {
  PointMap m;
  for (std::size_t s = 0; s < c1.size(); ++s) {
    m.emplace(c1[s], c2[s]);
    m.emplace(c2[s], c1[s]);
  }
  return finite_permutation(n, m);
}

std::vector<Point> column(const Element& a, const std::vector<int>& chain, const Int& start) {
  std::vector<Point> pts;
  Point p(chain.front(), start);
  for (std::size_t s = 0; s < chain.size(); ++s) {
    pts.push_back(p);
    p = a.evaluate(p);
  }
  return pts;
}

}  // namespace

std::optional<Element> odd_centralizer_element(const Element& a) {
  OrbitAnalyzer an(a);
  const ClassPartition& cp = an.classes();
  std::optional<Element> out;
  for (int c = 0; c < cp.class_count() && !out; ++c) {
    if (an.class_in_I(c)) continue;
    const auto& chain = cp.classes[c];
    const Int z = an.cuts()[chain.front() - 1];
    if (chain.size() % 2 == 0)
      out = cycle_of(a, column(a, chain, z));
    else
      out = swap_cycles(a.n(), column(a, chain, z), column(a, chain, z + 1));
  }
  if (!out) {
    // Every class moves: only the finitely many finite orbits are available.
    std::map<std::size_t, std::vector<Point>> first_of_length;
    for (auto& cyc : an.finite_orbits_in_region()) {
      if (cyc.size() % 2 == 0) {
        out = cycle_of(a, cyc);
        break;
      }
      auto it = first_of_length.find(cyc.size());
      if (it != first_of_length.end()) {
        out = swap_cycles(a.n(), it->second, cyc);
        break;
      }
      first_of_length.emplace(cyc.size(), cyc);
    }
  }
  if (out) {
    if (compose(a, *out) != compose(*out, a)) throw std::logic_error("odd element does not commute");
    if (finite_perm_sign(*out) != Parity::Odd) throw std::logic_error("odd element is even");
  }
  return out;
}

namespace {

Element product_of_powers(int n, const std::vector<Element>& gens, const IntVector& alpha) {
  Element c = Element::identity(n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (alpha[i] != 0) c = compose(c, power(gens[i], alpha[i]));
  return c;
}

}  // namespace

std::optional<Witness> conjugate_in_up_image(const Element& a, const Element& b,
                                             const Element& x, int p) {
  if (p < 1) throw InputError("p must be positive");
  if (a.n() % p != 0) throw InputError("arity is not a multiple of p");
  if (conjugate(a, x) != b) throw InputError("x does not conjugate a to b");
  const int n = a.n() / p;
  const CentralizerLatticeGens lat = centralizer_translation_lattice(a);
  const auto sol = feasibility_in_Tp(lat.translationGens, x.t(), n, p);
  if (!sol) return std::nullopt;
  const std::vector<Element> gens = lat.elements();
  const Element c = product_of_powers(a.n(), gens, sol->alpha);
  const Element y = compose(c, x);
  const RescaleMap map = RescaleMap::uniform(n, p);
  const UpParams params{n, p};
  auto accept = [&](const Element& cand) -> std::optional<Witness> {
    if (conjugate(a, cand) != b) throw std::logic_error("centralizer product broke conjugacy");
    if (up_membership(unrescale_element(cand, map), params)) return Witness{cand, true, {}};
    return std::nullopt;
  };
  if (auto w = accept(y)) return w;
  // Wrong parity: multiply by a centralizing element of odd correction parity.
  if (auto z = odd_centralizer_element(a))
    if (auto w = accept(compose(*z, y))) return w;
  for (const IntVector& k : sol->alphaKernel)
    if (auto w = accept(compose(product_of_powers(a.n(), gens, k), y))) return w;
  return std::nullopt;
}

}  // namespace houghton
