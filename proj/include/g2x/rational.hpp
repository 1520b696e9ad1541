#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace g2x {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact k-th root of a nonnegative integer, if one exists.
std::optional<BigInt> int_nth_root(const BigInt& x, unsigned k);

/// Exact k-th root of a rational. Even k demands x >= 0 and returns the
/// nonnegative root; odd k follows the sign of x.
std::optional<Rational> rational_nth_root(const Rational& x, unsigned k);

/// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument.
Rational rational_from_string(const std::string& s);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_to_string(const Rational& r);

}  // namespace g2x
