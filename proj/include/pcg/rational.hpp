#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pcg {

// Exact rational arithmetic everywhere a distance, weight, or bound appears.
// Edge/non-edge classification is boundary-inclusive, and witnesses sit exactly
// on the bounds, so tolerance-based comparison would misclassify pairs.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "17", "3.25", ".5", "7/4", each with optional leading '-'.
// Throws std::invalid_argument on anything else (notably floats like "1e9").
Rational parse_rational(const std::string& s);

// Exact decimal rendering; requires the denominator to be of the form 2^a 5^b.
// Throws std::logic_error otherwise (callers scale witnesses to integers first).
std::string decimal_string(const Rational& r);

// Decimal when exactly representable, otherwise "p/q". For diagnostics.
std::string rational_string(const Rational& r);

}  // namespace pcg
