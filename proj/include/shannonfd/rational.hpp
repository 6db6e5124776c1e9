#ifndef SHANNONFD_RATIONAL_HPP
#define SHANNONFD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shannonfd {

// Arbitrary-precision rational. All core arithmetic is exact.
using Rational = mpq_class;

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p" and "p/q". Throws std::invalid_argument on bad input or a
// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace shannonfd

#endif  // SHANNONFD_RATIONAL_HPP
