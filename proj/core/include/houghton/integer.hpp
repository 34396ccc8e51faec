#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace houghton {

// Depths, translations and matrix entries are unbounded integers.
// Expression templates are off so results mix freely with std::max and auto.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division and the matching non-negative remainder (divisor != 0).
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

std::string to_string(const Int& x);
Int parse_int(const std::string& s);  // throws InputError on malformed text

bool fits_int64(const Int& x);
std::int64_t to_int64(const Int& x);  // throws ResourceError when out of range

}  // namespace houghton
