#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace concyclic {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "num/den" or a plain integer string. Throws Error(parse_error)
/// on malformed input or a non-positive denominator.
Rational parse_rational(const std::string& text);

/// Formats as "num/den" (den always present, even for integers).
std::string format_rational(const Rational& value);

} // namespace concyclic
