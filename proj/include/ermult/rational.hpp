#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ermult {

// Exact scalars. cpp_rational keeps values in lowest terms with a positive
// denominator; all arithmetic is arbitrary precision, so nothing overflows.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p" or "p/q", minus sign on the numerator.
std::string to_string(const Rational& r);

// Accepts the same grammar as to_string. Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

}  // namespace ermult
