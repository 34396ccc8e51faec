#include "houghton/subgroup.hpp"

#include "houghton/centralizer.hpp"
#include "houghton/errors.hpp"
#include "houghton/intlinalg.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

namespace houghton {

Parity finite_perm_sign(const Element& x) {
  if (!x.in_fsym()) throw InputError("parity is defined for finitary permutations only");
  std::set<Point> seen;
  long transpositions = 0;
  for (const auto& [p, q] : x.head()) {
    if (p == q || seen.count(p)) continue;
    long len = 0;
    Point c = p;
    do {
      seen.insert(c);
      c = x.evaluate(c);
      ++len;
    } while (c != p);
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool up_membership(const Element& g, const UpParams& params) {
  if (!g.in_hn()) throw InputError("U_p membership needs an element of H_n");
  if (params.p < 1) throw InputError("p must be positive");
  if (g.n() != params.n) throw InputError("arity mismatch");
  for (int i = 1; i <= g.n(); ++i)
    if (mod_floor(g.t(i), Int(params.p)) != 0) return false;
  if (params.p % 2 != 0 && params.n != 2) return true;
  Element corr = g;
  for (int i = 2; i <= g.n(); ++i)
    if (g.t(i) != 0) corr = compose(corr, power(standard_generator(g.n(), i), g.t(i)));
  return finite_perm_sign(corr) == Parity::Even;
}

std::vector<Int> min_translations(const std::vector<Element>& generators) {
  if (generators.empty()) throw InputError("no generators given");
  const int n = generators.front().n();
  std::vector<IntVector> vecs;
  for (const Element& g : generators) {
    if (g.n() != n) throw InputError("arity mismatch");
    if (!g.in_hn()) throw InputError("generators must lie in H_n");
    vecs.push_back(g.t());
  }
  const auto basis = lattice_basis(vecs, static_cast<std::size_t>(n));
  if (static_cast<int>(basis.size()) < n - 1)
    throw InputError("generated subgroup does not have finite index");
  std::vector<Int> T(n);
  for (int i = 0; i < n; ++i) {
    Int g = 0;
    for (const auto& b : basis) g = gcd_int(g, b[i]);
    T[i] = g;
  }
  return T;
}

RescaleMap::RescaleMap(int n, std::vector<Int> T) : n_(n), T_(std::move(T)) {
  if (n < 1 || static_cast<int>(T_.size()) != n) throw InputError("block sizes do not match arity");
  int acc = 0;
  for (const Int& t : T_) {
    if (t < 1 || t > 100000) throw InputError("block sizes must lie in [1, 100000]");
    offset_.push_back(acc + 1);
    acc += static_cast<int>(t);
  }
  target_ = acc;
}

RescaleMap RescaleMap::uniform(int n, int p) { return RescaleMap(n, std::vector<Int>(n, Int(p))); }

int RescaleMap::block_of(int target_ray) const {
  if (target_ray < 1 || target_ray > target_) throw InputError("target ray out of range");
  int i = 1;
  while (i < n_ && offset_[i] <= target_ray) ++i;
  return i;
}

Point RescaleMap::to_target(const Point& p) const {
  const Int& T = T_[p.ray - 1];
  const Int d = mod_floor(p.depth - 1, T) + 1;
  const Int k = (p.depth - d) / T + 1;
  return Point(offset_[p.ray - 1] + static_cast<int>(d) - 1, k);
}

Point RescaleMap::to_source(const Point& q) const {
  const int i = block_of(q.ray);
  const Int d = q.ray - offset_[i - 1] + 1;
  return Point(i, d + (q.depth - 1) * T_[i - 1]);
}

Element rescale_element(const Element& g, const RescaleMap& map) {
  const int n = g.n();
  if (n != map.source_arity()) throw InputError("arity mismatch");
  const auto& T = map.block_sizes();
  const int N = map.target_arity();
  std::vector<int> sigma(N);
  std::vector<Int> t(N), cut(N);
  for (int i = 1; i <= n; ++i) {
    const int j = g.sigma()(i);
    if (T[i - 1] != T[j - 1]) throw InputError("block sizes differ along a ray cycle");
    if (mod_floor(g.t(i), T[i - 1]) != 0) throw InputError("translation not divisible by block size");
    for (int d = 0; d < static_cast<int>(T[i - 1]); ++d) {
      const int r = map.block_start(i) + d;
      sigma[r - 1] = map.block_start(j) + d;
      t[r - 1] = g.t(i) / T[i - 1];
      cut[r - 1] = g.z(i) / T[i - 1] + 2;
    }
  }
  return Element::from_function(N, RayPermutation(sigma), t, cut, [&](const Point& q) {
    return map.to_target(g.evaluate(map.to_source(q)));
  });
}

Element unrescale_element(const Element& y, const RescaleMap& map) {
  const int N = y.n();
  if (N != map.target_arity()) throw InputError("arity mismatch");
  const int n = map.source_arity();
  const auto& T = map.block_sizes();
  std::vector<int> sigma(n);
  std::vector<Int> t(n), cut(n, Int(1));
  for (int i = 1; i <= n; ++i) {
    const int first = map.block_start(i);
    const int img = y.sigma()(first);
    const int j = map.block_of(img);
    if (img != map.block_start(j) || T[i - 1] != T[j - 1])
      throw InputError("ray permutation does not respect the blocks");
    for (int d = 0; d < static_cast<int>(T[i - 1]); ++d) {
      const int r = first + d;
      if (y.sigma()(r) != map.block_start(j) + d || y.t(r) != y.t(first))
        throw InputError("element is not constant on blocks");
      cut[i - 1] = std::max(cut[i - 1], (y.z(r) + 1) * T[i - 1] + 1);
    }
    sigma[i - 1] = j;
    t[i - 1] = y.t(first) * T[i - 1];
  }
  return Element::from_function(n, RayPermutation(sigma), t, cut, [&](const Point& p) {
    return map.to_source(y.evaluate(map.to_target(p)));
  });
}

Decision conjugate_in_up(const Element& a0, const Element& b0, const UpParams& params,
                         const HnOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (!up_membership(a0, params) || !up_membership(b0, params))
    throw InputError("inputs must lie in U_p");
  Decision d;
  auto finish = [&]() {
    d.stats.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return d;
  };
  if (a0 == b0) {
    d.conjugate = true;
    d.witness = Witness{Element::identity(a0.n()), true, {}};
    return finish();
  }
  const RescaleMap map = RescaleMap::uniform(params.n, params.p);
  const Element A = rescale_element(a0, map);
  const Element B = rescale_element(b0, map);
  const Decision inner = conjugate_in_hn(A, B, opts);
  d.stats = inner.stats;
  if (!inner.conjugate) return finish();
  const auto y = conjugate_in_up_image(A, B, inner.witness->x, params.p);
  if (!y) return finish();
  const Element u = unrescale_element(y->x, map);
  if (conjugate(a0, u) != b0 || !up_membership(u, params))
    throw std::logic_error("U_p witness failed verification");
  d.conjugate = true;
  d.witness = Witness{u, true, {}};
  return finish();
}

}  // namespace houghton
