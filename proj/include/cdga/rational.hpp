#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cdga {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" with q >= 1 and gcd(p,q) = 1, e.g. "-3/2", "5/1".
std::string fraction_string(const Rational& r);

// Human form: omits "/1".
std::string rational_string(const Rational& r);

// Accepts "p", "p/q", optional leading sign. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

} // namespace cdga
