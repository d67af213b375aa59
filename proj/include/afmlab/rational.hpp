#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace afmlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "5", "-3.25", "1/3", "2.5e-3" into an exact rational.
// Decimal inputs are exact: "0.1" becomes 1/10, not the nearest double.
Rational rational_from_decimal(std::string_view text);

std::string rational_to_string(const Rational& r); // "p/q", or "p" when q == 1

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// base^exp for integer exp >= 0
Rational rational_pow(const Rational& base, int exp);

} // namespace afmlab
