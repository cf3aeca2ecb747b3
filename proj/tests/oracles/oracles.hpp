#pragma once

// Independent reference computations used only by the tests.

#include <utility>

#include "covcert/rigor/interval.hpp"

namespace covcert::oracles {

using rigor::Interval;
using rigor::Rational;

/// MPFR evaluations at `bits` precision, widened by a few ulps so that the
/// rounding of the rational input is covered.
Interval mpfr_pi(long bits = 512);
Interval mpfr_exp(const Rational& x, long bits = 512);
Interval mpfr_log(const Rational& x, long bits = 512);
Interval mpfr_sqrt(const Rational& x, long bits = 512);
Interval mpfr_gamma(const Rational& x, long bits = 512);
Interval mpfr_zeta(const Rational& s, long bits = 512);
/// pi^(s/2) / (Gamma(s/2) zeta(s)) evaluated entirely in MPFR.
Interval mpfr_alpha(const Rational& s, long bits = 512);

/// Akiyama-Tanigawa algorithm; returns B_n with B_1 = +1/2, so callers
/// compare only n != 1.
Rational bernoulli_akiyama_tanigawa(unsigned n);

/// Smallest b >= 1, then smallest a >= 1, with a^2 - D b^2 = +-4.
std::pair<long, long> pell_bruteforce(long D);

/// sum_{k<=K} chi_D(k) k^-s for integer s, with the Abel-summation tail
/// bound 2 * D * (K+1)^-s.
Interval dirichlet_L_partial_sum(long D, long s, long K);

/// Number of ideals of norm m in the quadratic field of discriminant D:
/// sum over divisors d of m of chi_D(d).
long quadratic_ideal_count(long D, long m);

/// |L(s, chi)|^2 for the cubic characters of conductor 7, from partial sums
/// up to K. Times zeta(s) this is the Dedekind zeta of the cyclic cubic field
/// of discriminant 49.
Interval cyclic_cubic7_L_norm(long s, long K);

/// Composite formulas evaluated directly in MPFR at 544 bits.
Interval mpfr_Pi(int n);
Interval mpfr_proto_bound(int n, int d, long h);
Interval mpfr_O(int n, int d, const Rational& A, const Rational& E);
Interval mpfr_F(int d, const Rational& D, int n);
Interval mpfr_n3_threshold(const Rational& A, const Rational& E);
Interval mpfr_n3_D_bound(int d);
Interval mpfr_n2_D_bound(int d);
/// The degree threshold of the n = 2 search, transcribed from its formula.
Interval mpfr_n2_rhs(const Rational& A, const Rational& E, const Rational& t);

}  // namespace covcert::oracles
