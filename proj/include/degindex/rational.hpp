#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace degindex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 1, plain "p" otherwise.
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

// Accepts "p/q", plain integers and decimal literals ("-3", "0.25").
Rational parse_rational(std::string_view text);

}  // namespace degindex
