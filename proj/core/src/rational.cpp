#include "walkinv/rational.hpp"

#include "walkinv/error.hpp"

namespace walkinv {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational value;
  const std::string owned(text);
  if (owned.empty() || value.set_str(owned, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + owned + "'");
  }
  if (value.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator: '" + owned + "'");
  }
  value.canonicalize();
  return value;
}

Rational make_rational(long numerator, long denominator) {
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

}  // namespace walkinv
