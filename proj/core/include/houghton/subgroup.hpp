#pragma once

#include "houghton/conjugacy.hpp"
#include "houghton/element.hpp"

#include <vector>

namespace houghton {

struct UpParams {
  int n = 2;
  int p = 1;
};

enum class Parity { Even, Odd };

// Parity of a finitely supported permutation. Throws InputError otherwise.
Parity finite_perm_sign(const Element& x);

// g in U_p: translations divisible by p and, when p is even or n = 2, the
// correction g prod_{i>=2} g_i^{t_i(g)} is an even permutation.
bool up_membership(const Element& g, const UpParams& params);

// Least positive i-th translation in the lattice spanned by the generators.
// Throws InputError when that lattice has rank below n - 1.
std::vector<Int> min_translations(const std::vector<Element>& generators);

// Splits source ray i into T_i interleaved rays:
// (i, d + (k-1) T_i) <-> (T_1 + ... + T_{i-1} + d, k) for 1 <= d <= T_i.
class RescaleMap {
 public:
  RescaleMap(int n, std::vector<Int> T);
  static RescaleMap uniform(int n, int p);

  int source_arity() const { return n_; }
  int target_arity() const { return target_; }
  const std::vector<Int>& block_sizes() const { return T_; }
  int block_start(int i) const { return offset_[i - 1]; }  // first target ray of block i
  int block_of(int target_ray) const;

  Point to_target(const Point& p) const;
  Point to_source(const Point& q) const;

 private:
  int n_;
  std::vector<Int> T_;
  std::vector<int> offset_;
  int target_;
};

// The induced element phi^-1 g phi on the target. Requires t_i(g) = 0 mod T_i
// and T constant on cycles of sigma_g.
Element rescale_element(const Element& g, const RescaleMap& map);
// Inverse of rescale_element; requires translations constant on blocks.
Element unrescale_element(const Element& y, const RescaleMap& map);

// Conjugacy inside U_p of two of its elements.
Decision conjugate_in_up(const Element& a0, const Element& b0, const UpParams& params,
                         const HnOptions& opts = {});

}  // namespace houghton
