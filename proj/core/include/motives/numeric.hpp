#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace motives {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical string form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

/// Inverse of rational_to_string; accepts "p" and "p/q".
Rational rational_from_string(const std::string& s);

Rational rational_abs(const Rational& r);

/// q^e for possibly negative e.  q must be nonzero when e < 0.
Rational rational_pow(const Rational& q, long e);

Integer binomial(long n, long k);

}  // namespace motives
