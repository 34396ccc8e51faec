#pragma once

#include "houghton/element.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace houghton {

// {(i,m) : m < bound_i}
struct FiniteRegion {
  std::vector<Int> bound;

  bool contains(const Point& p) const { return p.depth < bound[p.ray - 1]; }
};

struct FsymOptions {
  // Budget on point assignments made while building one conjugator.
  std::size_t maxAssignments = 10000;
};

// max(z_i(g_r), z_i(h_r)) for r >= 1; r = 0 selects the infinite parts.
FiniteRegion fsym_region(const Element& g, const Element& h, long r);

// Necessary condition: outside the common support, g and h move equally many
// points (and only finitely many).
bool fsym_precheck(const Element& g, const Element& h);

// Conjugator of g_r onto h_r supported in fsym_region(g, h, r).
std::optional<Element> conjugate_r_parts(const Element& g, const Element& h, long r,
                                         const FsymOptions& opts = {});

// Finitely supported conjugator of g_inf onto h_inf; it is unique on the
// infinite orbits, so the search is a forced walk plus a completion.
std::optional<Element> conjugate_infinite_parts(const Element& g, const Element& h,
                                                const FsymOptions& opts = {});

// Finitely supported x with x^-1 g x = h, or nothing.
std::optional<Element> conjugate_in_fsym(const Element& g, const Element& h,
                                         const FsymOptions& opts = {});

}  // namespace houghton
