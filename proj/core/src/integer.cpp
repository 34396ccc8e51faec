#include "houghton/integer.hpp"

#include "houghton/errors.hpp"

#include <limits>

namespace houghton {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += abs_int(b);
  return r;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Int gcd_int(const Int& a, const Int& b) {
  Int x = abs_int(a), y = abs_int(b);
  while (y != 0) {
    Int r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

std::string to_string(const Int& x) { return x.str(); }

Int parse_int(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw InputError("malformed integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw InputError("malformed integer '" + s + "'");
  std::string digits = s[0] == '+' ? s.substr(1) : s;
  return Int(digits);
}

bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) throw ResourceError("integer " + x.str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

}  // namespace houghton
