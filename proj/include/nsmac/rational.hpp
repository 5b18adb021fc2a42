#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace nsmac {

// All coefficient and geometric arithmetic is exact. No floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;

// base^e for integer e of either sign. base must be nonzero when e < 0.
Rational rational_pow(const Rational& base, long long e);

// Canonical "p/q" rendering ("p" when the denominator is 1). Never decimal.
std::string rational_to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else
// (including q == 0).
Rational parse_rational(const std::string& s);

} // namespace nsmac
