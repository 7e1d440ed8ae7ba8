#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sagecirc {

/// Arbitrary-precision rational scalar. Always stored in lowest terms with a
/// positive denominator (the backend canonicalizes on every operation), so
/// equality is plain value equality.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;

/// Renders "p/q", or just "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or "-p/q". Whitespace is not accepted.
std::optional<Rational> parse_rational(const std::string& text);

int sign(const Rational& q);

}  // namespace sagecirc
