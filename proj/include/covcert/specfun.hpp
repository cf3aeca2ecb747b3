#pragma once

#include "covcert/rigor/interval.hpp"

namespace covcert::specfun {

using rigor::Integer;
using rigor::Interval;
using rigor::Rational;

inline constexpr long kDefaultPrecision = 256;

/// All enclosures below are rounded outward to `precision_bits` significant
/// bits after being computed with 32 guard bits, so the width is a few units
/// in the last place unless the argument interval itself is wide.

Interval pi_enclosure(long precision_bits = kDefaultPrecision);
Interval exp_enclosure(const Interval& x, long precision_bits = kDefaultPrecision);
/// Throws LogOfNonPositive unless x.lo > 0.
Interval log_enclosure(const Interval& x, long precision_bits = kDefaultPrecision);
/// Exact when x is a point whose numerator and denominator are squares.
Interval sqrt_enclosure(const Interval& x, long precision_bits = kDefaultPrecision);
/// base^exponent. A point integer exponent uses exact powers; otherwise
/// base.lo > 0 is required.
Interval pow_enclosure(const Interval& base, const Interval& exponent, long precision_bits = kDefaultPrecision);

/// Throws NonPositiveArgument unless x.lo > 0.
Interval gamma_enclosure(const Interval& x, long precision_bits = kDefaultPrecision);

/// B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);
/// c with zeta(2j) = c * pi^(2j); 1 <= j <= 64.
Rational zeta_even_exact(unsigned j);

/// Throws ArgumentNotGreaterThanOne unless s.lo > 1.
Interval zeta_real_enclosure(const Interval& s, long precision_bits = kDefaultPrecision);
/// sum_{k>=0} (k+a)^(-s) for a > 0.
Interval hurwitz_zeta_enclosure(const Interval& s, const Rational& a, long precision_bits = kDefaultPrecision);

/// pi^(s/2) / (Gamma(s/2) zeta(s)).
Interval alpha_enclosure(const Interval& s, long precision_bits = kDefaultPrecision);

struct StirlingBounds {
  Interval lower;  // sqrt(2 pi n) (n/e)^n e^(1/(12n+1))
  Interval upper;  // sqrt(2 pi n) (n/e)^n e^(1/(12n))
};
StirlingBounds stirling_bounds(unsigned long n, long precision_bits = kDefaultPrecision);

bool is_fundamental_discriminant(long D);
/// Kronecker symbol (D / n) for n >= 1.
int kronecker(long D, long n);

/// L(s, chi_D) for the real primitive character of a positive fundamental
/// discriminant D. Throws UnsupportedModulus for anything else.
Interval dirichlet_L_enclosure(long D, const Interval& s, long precision_bits = kDefaultPrecision);

/// B_{k,chi} = D^(k-1) sum_{a=1}^{D} chi(a) B_k(a/D).
Rational generalized_bernoulli(long D, unsigned k);
/// c with L(2j, chi_D) = c * sqrt(D) * pi^(2j) (D > 1 positive fundamental).
Rational dirichlet_L_even_coefficient(long D, unsigned j);

}  // namespace covcert::specfun
