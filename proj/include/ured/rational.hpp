#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ured {

using bigint = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator. All index and martingale arithmetic runs on this type so
/// equality assertions are exact.
using rational = boost::multiprecision::cpp_rational;

/// Parses "p", "p/q" or "-p/q". Throws input_error on malformed text or a
/// zero denominator.
rational parse_rational(std::string_view text);

/// Serializes as "p/q" (denominator always printed, e.g. "2/3", "1/1").
std::string rational_to_string(const rational& value);

double rational_to_double(const rational& value);

/// Exact conversion of a finite double (binary fraction) to a rational.
rational rational_from_double(double value);

rational rational_abs(const rational& value);

}  // namespace ured
