#pragma once

#include "houghton/conjugacy.hpp"
#include "houghton/element.hpp"
#include "houghton/orbits.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace houghton {

using Json = nlohmann::ordered_json;

// Integers outside the int64 range are written as decimal strings.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

// {"n","sigma","t","z","head"} in that order; head lists [[i,m],[j,k]] pairs.
Json element_to_json(const Element& g);
// Rebuilds and canonicalizes; throws InputError on malformed or
// non-canonical input.
Element element_from_json(const Json& j);

Json ray_permutation_to_json(const RayPermutation& s);

Json orbit_to_json(const OrbitDescriptor& d);

Json decision_to_json(const Decision& d);

}  // namespace houghton
