#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace nonrep {

using Rational = boost::rational<std::int64_t>;

/// Parses "a/b" or "a". Decimal points and exponents are rejected.
Rational parse_rational(std::string_view text);

/// Always renders as "a/b" (e.g. "7/3", "2/1").
std::string to_string(const Rational& r);

inline std::int64_t floor(const Rational& r) {
  auto q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

inline std::int64_t ceil(const Rational& r) { return -floor(-r); }

}  // namespace nonrep
