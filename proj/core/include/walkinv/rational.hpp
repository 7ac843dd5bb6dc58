#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace walkinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical exact form: "p/q" with q > 1, or "p" when the value is integral.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts the forms produced by to_string (and non-canonical "p/q").
Rational parse_rational(std::string_view text);

Rational make_rational(long numerator, long denominator = 1);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace walkinv
