#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace pe {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// mpq keeps values reduced with a positive denominator, which is exactly
// the representation contract for exact coefficients.

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // throws unless is_integer
long to_long(const Rational& q);        // throws unless it fits

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Rational pow_rational(const Rational& base, long e);

// q = p/q with q > 0; floor division toward -inf
Integer floor_rational(const Rational& q);

}  // namespace pe
