#include "houghton/conjugacy.hpp"

#include "houghton/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace houghton {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Int sum_abs(const IntVector& v, const std::vector<int>& rays) {
  Int s = 0;
  for (int r : rays) s += abs_int(v[r - 1]);
  return s;
}

// Extended Euclid: returns g = gcd(a,b) >= 0 with a x + b y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return abs_int(a);
  }
  Int x1, y1;
  const Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

ConjugacyInstance make_instance(const Element& a, const Element& b) {
  if (a.n() != b.n()) throw InputError("arity mismatch");
  return ConjugacyInstance{a, b, class_partition(a), infinite_ray_set(a)};
}

ConjugacyInstance twisted_to_pair(const Element& c, const Element& g, const Element& h) {
  if (!g.in_hn() || !h.in_hn()) throw InputError("twisted conjugacy needs g, h in H_n");
  if (c.n() != g.n() || g.n() != h.n()) throw InputError("arity mismatch");
  return make_instance(compose(c, g), compose(c, h));
}

bool necessary_checks(const ConjugacyInstance& inst) {
  if (inst.a.n() != inst.b.n() || inst.a.sigma() != inst.b.sigma()) return false;
  for (int c = 0; c < inst.classes.class_count(); ++c) {
    Int tb = 0;
    for (int r : inst.classes.classes[c]) tb += inst.b.t(r);
    if (tb != inst.classes.classTranslation[c]) return false;
  }
  return true;
}

std::vector<IntVector> translation_offsets(const ConjugacyInstance& inst) {
  std::vector<IntVector> out;
  for (const auto& chain : inst.classes.classes) {
    IntVector off(chain.size());
    for (std::size_t s = 1; s < chain.size(); ++s)
      off[s] = off[s - 1] + inst.b.t(chain[s - 1]) - inst.a.t(chain[s - 1]);
    out.push_back(std::move(off));
  }
  return out;
}

namespace {

// Points of ray p.ray in the progression p lying below depth eps.
Int progression_points_below(const ProgressionSet& p, const Int& eps) {
  const Int first = p.minDepth + mod_floor(p.residue - p.minDepth, p.modulus);
  if (first >= eps) return 0;
  return (eps - 1 - first) / p.modulus + 1;
}

// For each pair of classes x <= y linked by an infinite orbit of g, the
// largest number of orbit points outside the progression tails cut at eps.
std::vector<std::vector<Int>> orbit_excess_table(const Element& g, int classes,
                                                 const std::vector<Int>& eps) {
  std::vector<std::vector<Int>> tab(classes, std::vector<Int>(classes, Int(-1)));
  OrbitAnalyzer an(g);
  for (const Point& p : an.infinite_orbit_representatives()) {
    const OrbitDescriptor d = an.describe(p);
    Int excess = static_cast<long>(d.exceptional.size());
    for (const auto& prog : d.forward) excess += progression_points_below(prog, eps[prog.ray - 1]);
    for (const auto& prog : d.backward) excess += progression_points_below(prog, eps[prog.ray - 1]);
    const int x = std::min(d.forwardClass, d.backwardClass);
    const int y = std::max(d.forwardClass, d.backwardClass);
    tab[x][y] = std::max(tab[x][y], excess);
  }
  return tab;
}

}  // namespace

std::vector<std::pair<int, int>> linked_class_pairs(const Element& g) {
  std::set<std::pair<int, int>> pairs;
  OrbitAnalyzer an(g);
  for (const Point& p : an.infinite_orbit_representatives()) {
    const OrbitDescriptor d = an.describe(p);
    if (d.forwardClass != d.backwardClass)
      pairs.emplace(std::min(d.forwardClass, d.backwardClass), std::max(d.forwardClass, d.backwardClass));
  }
  return {pairs.begin(), pairs.end()};
}

Int orbit_gap_bound(const ConjugacyInstance& inst) {
  const ClassPartition& cp = inst.classes;
  const int k = cp.class_count();
  // Orbit tails are compared beyond the deeper of the two cuts on each ray.
  const auto za = refined_cuts(inst.a);
  const auto zb = refined_cuts(inst.b);
  std::vector<Int> eps(za.size());
  for (std::size_t r = 0; r < za.size(); ++r) eps[r] = std::max(za[r], zb[r]);
  const auto sa = orbit_excess_table(inst.a, k, eps);
  const auto sb = orbit_excess_table(inst.b, k, eps);
  const auto off = translation_offsets(inst);
  std::vector<Int> spread(k);
  for (int c = 0; c < k; ++c) {
    if (cp.classTranslation[c] == 0) continue;
    Int C = 0;
    for (const Int& o : off[c]) C += o;
    spread[c] = ceil_div(abs_int(C), abs_int(cp.classTranslation[c]));
  }
  Int best = 0;
  for (int x = 0; x < k; ++x)
    for (int y = x; y < k; ++y) {
      if (sa[x][y] < 0 && sb[x][y] < 0) continue;
      const Int B = std::max(sa[x][y], Int(0)) + std::max(sb[x][y], Int(0)) + spread[x] + spread[y];
      best = std::max(best, B);
    }
  return Int(inst.a.n()) * best + 1;
}

Int infinite_bound(const ConjugacyInstance& inst) {
  Int tmax = 0;
  for (const Int& t : inst.classes.classTranslation) tmax = std::max(tmax, abs_int(t));
  if (tmax == 0) return 0;
  return Int(inst.a.n()) * orbit_gap_bound(inst) * tmax;
}

Int eta(const Element& g, long r) {
  if (r < 1) throw InputError("cycle length must be positive");
  OrbitAnalyzer an(g);
  const ClassPartition& cp = an.classes();
  Int count = 0;
  for (const auto& cyc : an.finite_orbits_in_region()) {
    if (static_cast<long>(cyc.size()) != r) continue;
    bool column = false;
    for (const Point& p : cyc) {
      const int c = cp.classOf[p.ray];
      if (cp.classes[c].front() == p.ray && cp.sizes[c] == r && cp.classTranslation[c] == 0 &&
          p.depth >= an.cuts()[p.ray - 1])
        column = true;
    }
    if (!column) ++count;
  }
  return count;
}

std::map<int, Int> finite_class_targets(const ConjugacyInstance& inst) {
  const ClassPartition& cp = inst.classes;
  const auto za = refined_cuts(inst.a);
  const auto zb = refined_cuts(inst.b);
  const auto off = translation_offsets(inst);
  std::map<int, Int> out;
  std::map<int, bool> first_of_size;
  for (int c = 0; c < cp.class_count(); ++c) {
    if (cp.classTranslation[c] != 0) continue;
    const auto& chain = cp.classes[c];
    const int r = cp.sizes[c];
    const int head = chain.front();
    Int y = zb[head - 1] - za[head - 1];
    if (!first_of_size[r]) {
      first_of_size[r] = true;
      y += eta(inst.a, r) - eta(inst.b, r);
    }
    for (std::size_t s = 0; s < chain.size(); ++s) out[chain[s]] = y + off[c][s];
  }
  return out;
}

IntVector coset_moduli(const Element& a) {
  const ClassPartition cp = class_partition(a);
  const Int order = a.sigma().order();
  IntVector m(a.n());
  for (int i = 1; i <= a.n(); ++i) m[i - 1] = order * abs_int(cp.classTranslation[cp.classOf[i]]);
  return m;
}

std::vector<IntVector> coset_reps(const Element& a) {
  const IntVector mod = coset_moduli(a);
  std::vector<IntVector> out{IntVector(a.n())};
  for (int i = 1; i <= a.n(); ++i) {
    if (mod[i - 1] <= 1) continue;
    std::vector<IntVector> next;
    for (const auto& v : out)
      for (Int r = 0; r < mod[i - 1]; ++r) {
        IntVector w = v;
        w[i - 1] = r;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<IntVector> lift_coset_rep(const Element& a, const IntVector& v) {
  const IntVector mod = coset_moduli(a);
  IntVector w = v;
  Int total = 0;
  for (const Int& x : w) total += x;
  if (total == 0) return w;
  for (int i = 1; i <= a.n(); ++i)
    if (mod[i - 1] == 0) {
      w[i - 1] -= total;
      return w;
    }
  // Every ray is constrained: solve sum_i k_i mod_i = -total.
  Int g = 0;
  IntVector k(a.n());
  std::vector<int> used;
  for (int i = 1; i <= a.n(); ++i) {
    Int x, y;
    const Int ng = ext_gcd(g, mod[i - 1], x, y);
    // Scale previous coefficients by x, set this one to y.
    for (int u : used) k[u - 1] *= x;
    k[i - 1] = y;
    used.push_back(i);
    g = ng;
  }
  if (g == 0 || total % g != 0) return std::nullopt;
  const Int f = -total / g;
  for (int i = 1; i <= a.n(); ++i) w[i - 1] += f * k[i - 1] * mod[i - 1];
  Int check = 0;
  for (const Int& x : w) check += x;
  if (check != 0) throw std::logic_error("coset lift failed");
  return w;
}

Element shift_element(const IntVector& v, int n) {
  if (static_cast<int>(v.size()) != n) throw InputError("shift vector has wrong length");
  Int total = 0;
  for (const Int& x : v) total += x;
  if (total != 0) throw InputError("shift vector must sum to zero");
  Element out = Element::identity(n);
  for (int i = 2; i <= n; ++i)
    if (v[i - 1] != 0) out = compose(out, power(standard_generator(n, i), -v[i - 1]));
  return out;
}

Element centralizer_orbit_element(const Element& g, int ray) {
  if (ray < 1 || ray > g.n()) throw InputError("ray out of range");
  const ClassPartition cp = class_partition(g);
  const int cls = cp.classOf[ray];
  if (cp.classTranslation[cls] == 0) throw InputError("ray is not on an infinite orbit");
  std::vector<bool> keep(cp.class_count(), false);
  for (const auto& comp : class_relation(g))
    if (std::find(comp.begin(), comp.end(), cls) != comp.end())
      for (int c : comp) keep[c] = true;
  return restrict_to_orbits(g, keep, [&](const OrbitAnalyzer::Info& info) {
    return info.infinite && keep[info.forwardClass];
  });
}

Element finite_class_shuffle(const Element& g, int j, int jp) {
  const int n = g.n();
  if (j < 1 || j > n || jp < 1 || jp > n) throw InputError("ray out of range");
  const ClassPartition cp = class_partition(g);
  const int cj = cp.classOf[j], cjp = cp.classOf[jp];
  if (cj == cjp) throw InputError("shuffle needs two distinct classes");
  if (cp.classTranslation[cj] != 0 || cp.classTranslation[cjp] != 0)
    throw InputError("shuffle needs classes with zero translation");
  if (cp.sizes[cj] != cp.sizes[cjp]) throw InputError("class sizes differ");
  const auto zf = refined_cuts(g);
  const auto& up = cp.classes[cj];
  const auto& down = cp.classes[cjp];
  // Depth of the bottom tail column on each ray of the two classes.
  std::vector<Int> base(n + 1);
  std::vector<int> pos(n + 1, -1);
  for (const auto* chain : {&up, &down}) {
    Int d = zf[chain->front() - 1];
    for (std::size_t s = 0; s < chain->size(); ++s) {
      base[(*chain)[s]] = d;
      pos[(*chain)[s]] = static_cast<int>(s);
      d += g.t((*chain)[s]);
    }
  }
  std::vector<Int> t(n), cut(n, Int(1));
  for (int r : up) {
    t[r - 1] = 1;
    cut[r - 1] = base[r] + 1;
  }
  for (int r : down) {
    t[r - 1] = -1;
    cut[r - 1] = base[r] + 2;
  }
  const Element c = Element::from_function(
      n, RayPermutation::identity(n), t, cut, [&](const Point& p) -> Point {
        if (cp.classOf[p.ray] == cj && p.depth >= base[p.ray]) return Point(p.ray, p.depth + 1);
        if (cp.classOf[p.ray] == cjp) {
          if (p.depth > base[p.ray]) return Point(p.ray, p.depth - 1);
          if (p.depth == base[p.ray]) {
            const int target = up[pos[p.ray]];
            return Point(target, base[target]);
          }
        }
        return p;
      });
  if (compose(g, c) != compose(c, g)) throw std::logic_error("class shuffle does not centralize");
  return c;
}

std::vector<IntVector> candidate_vectors(const ConjugacyInstance& inst, const HnOptions& opts) {
  const Element& a = inst.a;
  const int n = a.n();
  const ClassPartition& cp = inst.classes;
  const IntVector mod = coset_moduli(a);
  const auto off = translation_offsets(inst);
  const auto targets = finite_class_targets(inst);

  IntVector fixed(n);
  Int fixed_sum = 0;
  for (const auto& [ray, y] : targets) {
    fixed[ray - 1] = y;
    fixed_sum += y;
  }
  std::vector<int> iclasses;
  for (int c = 0; c < cp.class_count(); ++c) {
    if (cp.classTranslation[c] == 0) continue;
    const Int m = mod[cp.classes[c].front() - 1];
    for (const Int& o : off[c])
      if (mod_floor(o, m) != 0) return {};
    iclasses.push_back(c);
  }
  if (iclasses.empty()) {
    if (fixed_sum != 0) return {};
    return {fixed};
  }
  const Int M = infinite_bound(inst);

  // Conjugators differing by a centralizing power of some a_[i] are
  // interchangeable, so the head class of each ~ component is pinned to one
  // period of that power.
  std::map<int, Int> window;  // class index -> number of admissible l values
  const Int order = a.sigma().order();
  for (const auto& comp : class_relation(a)) {
    const int head = cp.classes[comp.front()].front();
    const Element w = power(centralizer_orbit_element(a, head), order);
    // Least L with L t_k(w) = 0 mod m_k on the component.
    Int L = 1;
    for (int c : comp)
      for (int r : cp.classes[c]) {
        const Int tk = abs_int(w.t(r));
        if (tk == 0) continue;
        L = lcm_int(L, mod[r - 1] / gcd_int(mod[r - 1], tk));
      }
    const Int step = abs_int(L * w.t(head));
    if (step == 0) throw std::logic_error("centralizer power has no translation");
    window[comp.front()] = step / mod[head - 1];
  }

  // Linked classes keep | |[x]||l_x| - |[y]||l_y| | < K, l = t_{i_1} / |t_[x]|.
  const Int K = orbit_gap_bound(inst);
  std::vector<std::vector<int>> linked(cp.class_count());
  for (const auto& [x, y] : linked_class_pairs(a)) {
    linked[x].push_back(y);
    linked[y].push_back(x);
  }
  // Tail counts. Each infinite orbit O of a must reappear in b with the same
  // tails, and conjugating by the shift v changes the number of points of O
  // below a deep cut by the sum over its progressions P of v_ray / modulus.
  // This gives one equation A_f l_f + A_b l_b = R per orbit.
  struct TailEquation {
    int cf, cb;
    Int af, ab, rhs;
  };
  std::vector<TailEquation> equations;
  {
    using TailKey = std::vector<std::tuple<int, int, Int, Int>>;
    auto key_of = [](const OrbitDescriptor& d) {
      TailKey k;
      for (const auto& p : d.forward) k.emplace_back(0, p.ray, mod_floor(p.residue, p.modulus), p.modulus);
      for (const auto& p : d.backward) k.emplace_back(1, p.ray, mod_floor(p.residue, p.modulus), p.modulus);
      std::sort(k.begin(), k.end());
      return k;
    };
    OrbitAnalyzer an_a(a), an_b(inst.b);
    std::vector<OrbitDescriptor> da, db;
    for (const Point& p : an_a.infinite_orbit_representatives()) da.push_back(an_a.describe(p));
    for (const Point& p : an_b.infinite_orbit_representatives()) db.push_back(an_b.describe(p));
    std::vector<Int> deep(n, Int(1));
    for (const auto* list : {&da, &db})
      for (const auto& d : *list) {
        for (const auto& p : d.forward) deep[p.ray - 1] = std::max(deep[p.ray - 1], p.minDepth);
        for (const auto& p : d.backward) deep[p.ray - 1] = std::max(deep[p.ray - 1], p.minDepth);
      }
    auto count_below = [&](const OrbitDescriptor& d) {
      Int c = static_cast<long>(d.exceptional.size());
      for (const auto& p : d.forward) c += progression_points_below(p, deep[p.ray - 1]);
      for (const auto& p : d.backward) c += progression_points_below(p, deep[p.ray - 1]);
      return c;
    };
    std::map<TailKey, Int> counts_b;
    for (const auto& d : db) counts_b[key_of(d)] = count_below(d);
    if (counts_b.size() != da.size()) return {};
    for (const auto& d : da) {
      const auto it = counts_b.find(key_of(d));
      if (it == counts_b.end()) return {};
      TailEquation e{d.forwardClass, d.backwardClass, 0, 0, count_below(d) - it->second};
      auto add = [&](const ProgressionSet& p) {
        const int c = cp.classOf[p.ray];
        const auto& chain = cp.classes[c];
        const std::size_t s = std::find(chain.begin(), chain.end(), p.ray) - chain.begin();
        const Int coef = mod[p.ray - 1] / p.modulus;
        (c == e.cf ? e.af : e.ab) += coef;
        e.rhs -= off[c][s] / p.modulus;
      };
      for (const auto& p : d.forward) add(p);
      for (const auto& p : d.backward) add(p);
      equations.push_back(e);
    }
  }
  std::vector<std::vector<std::size_t>> equations_of(cp.class_count());
  for (std::size_t i = 0; i < equations.size(); ++i) {
    equations_of[equations[i].cf].push_back(i);
    equations_of[equations[i].cb].push_back(i);
  }

  // Breadth-first from the pinned heads, so each later class of a component is
  // fixed by an equation with an earlier one.
  {
    std::vector<int> order;
    std::vector<bool> queued(cp.class_count(), false);
    auto flood = [&](int start) {
      if (queued[start]) return;
      queued[start] = true;
      order.push_back(start);
      for (std::size_t q = order.size() - 1; q < order.size(); ++q)
        for (std::size_t i : equations_of[order[q]])
          for (int y : {equations[i].cf, equations[i].cb})
            if (!queued[y]) {
              queued[y] = true;
              order.push_back(y);
            }
    };
    for (int c : iclasses)
      if (window.count(c)) flood(c);
    for (int c : iclasses) flood(c);
    iclasses = std::move(order);
  }

  std::vector<bool> placed(cp.class_count(), false);
  IntVector v = fixed;
  std::vector<Int> lval(cp.class_count());
  auto equation_ok = [&](const TailEquation& e) { return e.af * lval[e.cf] + e.ab * lval[e.cb] == e.rhs; };
  auto gap_ok = [&](int x, int y) {
    const Int tx = abs_int(cp.classTranslation[x]), ty = abs_int(cp.classTranslation[y]);
    const Int lhs = Int(static_cast<long>(cp.sizes[x])) * abs_int(v[cp.classes[x].front() - 1]) * ty -
                    Int(static_cast<long>(cp.sizes[y])) * abs_int(v[cp.classes[y].front() - 1]) * tx;
    return abs_int(lhs) < K * tx * ty;
  };

  // Depth-first over the free value l_c on each I class: t_{i_1}(y) = m_c l_c.
  std::vector<IntVector> found;
  const std::size_t enum_cap = std::max<std::size_t>(opts.maxCandidates, 1) * 16 + 100000;
  std::function<void(std::size_t, const Int&, const Int&)> dfs = [&](std::size_t idx,
                                                                      const Int& sum,
                                                                      const Int& abs_sum) {
    const int c = iclasses[idx];
    const auto& chain = cp.classes[c];
    const Int m = mod[chain.front() - 1];
    const Int size = static_cast<long>(chain.size());
    const auto pinned = window.find(c);
    Int C = 0, spread = 0;
    for (const Int& o : off[c]) {
      C += o;
      spread += abs_int(o);
    }
    // Pinned classes do not count against M.
    auto place = [&](const Int& l) -> std::optional<Int> {
      Int s = 0;
      for (std::size_t k = 0; k < chain.size(); ++k) {
        v[chain[k] - 1] = m * l + off[c][k];
        s += abs_int(v[chain[k] - 1]);
      }
      lval[c] = l;
      for (int y : linked[c])
        if (placed[y] && !gap_ok(c, y)) return std::nullopt;
      for (std::size_t i : equations_of[c]) {
        const auto& e = equations[i];
        if (placed[e.cf == c ? e.cb : e.cf] && !equation_ok(e)) return std::nullopt;
      }
      if (pinned != window.end()) return Int(0);
      if (abs_sum + s >= M) return std::nullopt;
      return s;
    };
    auto descend = [&](const Int& l, const std::function<void(const Int&)>& next) {
      const auto s = place(l);
      if (!s) return;
      placed[c] = true;
      next(*s);
      placed[c] = false;
    };
    if (idx + 1 == iclasses.size()) {
      const Int need = -(sum + C);
      if (need % (size * m) != 0) return;
      const Int l = need / (size * m);
      if (pinned != window.end() && (l < 0 || l >= pinned->second)) return;
      descend(l, [&](const Int&) {
        found.push_back(v);
        if (found.size() > enum_cap) throw ResourceError("too many candidate translation vectors");
      });
      for (int r : chain) v[r - 1] = 0;
      return;
    }
    Int lo, hi;
    if (pinned != window.end()) {
      lo = 0;
      hi = pinned->second - 1;
    } else {
      // size m |l| - spread <= placed sum < M - abs_sum.
      hi = (M - abs_sum + spread) / (size * m) + 1;
      // A placed linked class y bounds |[c]| |l_c| below |[y]| |l_y| + K.
      const Int tc = abs_int(cp.classTranslation[c]);
      for (int y : linked[c]) {
        if (!placed[y]) continue;
        const Int ty = abs_int(cp.classTranslation[y]);
        const Int A = Int(static_cast<long>(cp.sizes[y])) * abs_int(v[cp.classes[y].front() - 1]);
        // |v_c| < (A / ty + K) tc / size, and v_c = m l.
        hi = std::min(hi, ((A + K * ty) * tc) / (ty * size * m) + 1);
      }
      lo = -hi;
    }
    // An equation whose other class is placed fixes l_c.
    for (std::size_t i : equations_of[c]) {
      const auto& e = equations[i];
      const int y = e.cf == c ? e.cb : e.cf;
      if (!placed[y]) continue;
      const Int ac = e.cf == c ? e.af : e.ab, ay = e.cf == c ? e.ab : e.af;
      const Int r = e.rhs - ay * lval[y];
      if (r % ac != 0) return;
      const Int l = r / ac;
      if (l < lo || l > hi) return;
      lo = hi = l;
      break;
    }
    for (Int l = lo; l <= hi; ++l)
      descend(l, [&](const Int& s) { dfs(idx + 1, sum + size * m * l + C, abs_sum + s); });
    for (int r : chain) v[r - 1] = 0;
  };
  dfs(0, fixed_sum, Int(0));

  std::vector<int> iray;
  for (int c : iclasses)
    for (int r : cp.classes[c]) iray.push_back(r);
  std::sort(found.begin(), found.end(), [&](const IntVector& x, const IntVector& y) {
    const Int sx = sum_abs(x, iray), sy = sum_abs(y, iray);
    if (sx != sy) return sx < sy;
    return x < y;
  });
  return found;
}

Decision conjugate_in_hn(const Element& a, const Element& b, const HnOptions& opts) {
  const auto start = Clock::now();
  Decision d;
  const ConjugacyInstance inst = make_instance(a, b);
  if (!necessary_checks(inst)) {
    d.stats.elapsedMs = ms_since(start);
    return d;
  }
  if (a == b) {
    d.conjugate = true;
    d.witness = Witness{Element::identity(a.n()), true, std::nullopt};
    d.stats.elapsedMs = ms_since(start);
    return d;
  }
  const ClassPartition& cp = inst.classes;
  const IntVector mod = coset_moduli(a);

  for (const IntVector& rep : coset_reps(a)) {
    // Any conjugator is congruent to rep on I; residues must respect the
    // offset chain modulo the class modulus.
    bool chain_ok = true;
    for (int c = 0; c < cp.class_count() && chain_ok; ++c) {
      if (cp.classTranslation[c] == 0) continue;
      const auto& chain = cp.classes[c];
      for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
        const Int m = mod[chain[s] - 1];
        const Int step = b.t(chain[s]) - a.t(chain[s]);
        if (mod_floor(rep[chain[s + 1] - 1] - rep[chain[s] - 1] - step, m) != 0) chain_ok = false;
      }
    }
    if (!chain_ok) continue;
    const auto lifted = lift_coset_rep(a, rep);
    if (!lifted) continue;
    ++d.stats.cosetsTried;
    const Element xp = shift_element(*lifted, a.n());
    const Element ap = conjugate(a, xp);
    const ConjugacyInstance sub = make_instance(ap, b);
    for (const IntVector& v : candidate_vectors(sub, opts)) {
      if (d.stats.candidatesTried >= opts.maxCandidates)
        throw ResourceError("candidate budget of " + std::to_string(opts.maxCandidates) +
                            " exhausted");
      ++d.stats.candidatesTried;
      const Element xv = shift_element(v, a.n());
      const auto f = conjugate_in_fsym(conjugate(ap, xv), b, opts.fsym);
      if (!f) continue;
      const Element x = compose(compose(xp, xv), *f);
      if (conjugate(a, x) != b) throw std::logic_error("assembled conjugator failed verification");
      d.conjugate = true;
      d.witness = Witness{x, true, std::nullopt};
      d.stats.elapsedMs = ms_since(start);
      return d;
    }
  }
  d.stats.elapsedMs = ms_since(start);
  return d;
}

Decision twisted_conjugate(const Element& c, const Element& g, const Element& h,
                           const HnOptions& opts) {
  const ConjugacyInstance inst = twisted_to_pair(c, g, h);
  return conjugate_in_hn(inst.a, inst.b, opts);
}

std::vector<RayPermutation> permutation_closure(const std::vector<RayPermutation>& gens, int n) {
  std::set<RayPermutation> seen{RayPermutation::identity(n)};
  std::vector<RayPermutation> frontier{RayPermutation::identity(n)};
  for (const auto& s : gens)
    if (s.n() != n) throw InputError("ray permutation arity mismatch");
  while (!frontier.empty()) {
    std::vector<RayPermutation> next;
    for (const auto& p : frontier)
      for (const auto& s : gens) {
        RayPermutation q = p.then(s);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Decision conjugate_in_extension(const Element& a, const Element& b,
                                const std::vector<RayPermutation>& esigma,
                                const HnOptions& opts) {
  const auto start = Clock::now();
  Decision total;
  for (const RayPermutation& tau : permutation_closure(esigma, a.n())) {
    const Element T = ray_permutation_element(tau);
    const Element target = compose(compose(T, b), invert(T));
    Decision d = conjugate_in_hn(a, target, opts);
    total.stats.candidatesTried += d.stats.candidatesTried;
    total.stats.cosetsTried += d.stats.cosetsTried;
    if (d.conjugate) {
      if (conjugate(a, d.witness->x) != target)
        throw std::logic_error("extension witness failed verification");
      total.conjugate = true;
      total.witness = Witness{d.witness->x, true, tau};
      break;
    }
  }
  total.stats.elapsedMs = ms_since(start);
  return total;
}

}  // namespace houghton
