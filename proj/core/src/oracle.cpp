#include "houghton/oracle.hpp"

#include "houghton/errors.hpp"

#include <algorithm>

namespace houghton {

namespace {

void translation_vectors(int n, long T, long D, std::vector<long>& cur, long sum,
                         std::vector<std::vector<long>>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == n - 1) {
    const long last = -sum;
    if (last >= -T && last <= T && last >= -D) {
      cur.push_back(last);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (long t = std::max(-T, -D); t <= T; ++t) {
    cur.push_back(t);
    translation_vectors(n, T, D, cur, sum + t, out);
    cur.pop_back();
  }
}

}  // namespace

bool for_each_element(int n, const SearchBounds& bounds,
                      const std::function<bool(const Element&)>& visit) {
  if (n < 2) throw InputError("arity must be at least 2");
  if (bounds.maxAbsTranslation < 0 || bounds.maxHeadDepth < 0)
    throw InputError("search bounds must be non-negative");
  const long T = bounds.maxAbsTranslation;
  const long D = bounds.maxHeadDepth;
  std::vector<std::vector<long>> tvecs;
  std::vector<long> cur;
  translation_vectors(n, T, D, cur, 0, tvecs);

  std::vector<Point> domain;
  for (int i = 1; i <= n; ++i)
    for (long m = 1; m <= D; ++m) domain.emplace_back(i, m);
  std::size_t count = 0;
  for (const auto& tv : tvecs) {
    std::vector<Int> t(tv.begin(), tv.end());
    // Points not hit by the tail (i,m) -> (i,m+t_i), m > D.
    std::vector<Point> image;
    for (int i = 1; i <= n; ++i)
      for (long m = 1; m <= D + tv[i - 1]; ++m) image.emplace_back(i, m);
    std::sort(image.begin(), image.end());
    const std::vector<Int> cut(n, Int(D + 1));
    do {
      if (count >= bounds.maxCandidates) return true;
      ++count;
      PointMap table;
      for (std::size_t k = 0; k < domain.size(); ++k) table.emplace(domain[k], image[k]);
      const Element e =
          Element::from_table(n, RayPermutation::identity(n), t, cut, table);
      if (!visit(e)) return false;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return false;
}

Enumeration enumerate_elements(int n, const SearchBounds& bounds) {
  Enumeration out;
  out.truncated = for_each_element(n, bounds, [&](const Element& e) {
    out.elements.push_back(e);
    return true;
  });
  return out;
}

namespace {

// Cheap necessary test for a x = x b on a few points before composing.
bool commutes_on_samples(const Element& a, const Element& x, const Element& b) {
  const int n = a.n();
  for (int i = 1; i <= n; ++i)
    for (long m = 1; m <= 4; ++m) {
      const Point p(i, m);
      if (x.evaluate(a.evaluate(p)) != b.evaluate(x.evaluate(p))) return false;
    }
  return true;
}

}  // namespace

OracleVerdict brute_force_conjugate(const Element& a, const Element& b,
                                    const SearchBounds& bounds) {
  if (a.n() != b.n()) throw InputError("arity mismatch");
  OracleVerdict v;
  const bool truncated = for_each_element(a.n(), bounds, [&](const Element& x) {
    ++v.examined;
    if (!commutes_on_samples(a, x, b)) return true;
    if (compose(a, x) != compose(x, b)) return true;
    v.witness = x;
    return false;
  });
  if (v.witness)
    v.kind = OracleVerdict::Kind::Found;
  else
    v.kind = truncated ? OracleVerdict::Kind::Truncated : OracleVerdict::Kind::Exhausted;
  return v;
}

std::vector<Element> brute_force_centralizer(const Element& a, const SearchBounds& bounds) {
  std::vector<Element> out;
  for_each_element(a.n(), bounds, [&](const Element& x) {
    if (commutes_on_samples(a, x, a) && compose(a, x) == compose(x, a)) out.push_back(x);
    return true;
  });
  return out;
}

}  // namespace houghton
