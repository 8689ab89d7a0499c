#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace anydim {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p/q" or "p"; denominators are always positive after construction.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);
double to_double(const Rational& r);

Rational pow_int(const Rational& base, int exponent);

}  // namespace anydim
