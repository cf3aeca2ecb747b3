#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace covcert::rigor {

/// Exact rational number. GMP keeps every value canonical (positive
/// denominator, coprime parts) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Restores canonical form; idempotent.
Rational canonical(Rational r);

/// num/den in canonical form. The two-argument mpq_class constructor does
/// not reduce, and GMP arithmetic requires reduced operands.
Rational frac(const Integer& num, const Integer& den);
inline Rational frac(long num, long den) { return frac(Integer(num), Integer(den)); }

/// Parses "-3/2", "17", "6.894", "1e-5", "2.5E3".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Rounded decimal with `significant` digits in scientific-free form when
/// reasonable, e.g. "15.2199430285" or "4.34027777778e-06".
std::string to_decimal(const Rational& r, int significant);

double to_double(const Rational& r);

Rational pow(const Rational& base, long exponent);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Position of the leading bit: 2^(e-1) <= |r| < 2^(e+1). Undefined for zero.
long magnitude_bits(const Rational& r);

/// Largest (resp. smallest) dyadic number with at most `bits` significant
/// bits that is <= r (resp. >= r).
Rational round_down(const Rational& r, long bits);
Rational round_up(const Rational& r, long bits);

}  // namespace covcert::rigor
