#include "covcert/error.hpp"
#include "internal.hpp"

namespace covcert::specfun {

using namespace detail;

namespace {

bool squarefree(long m) {
  if (m < 0) m = -m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

void require_fundamental(long D) {
  if (D <= 1 || !is_fundamental_discriminant(D)) {
    throw Error(Errc::UnsupportedModulus, "not a positive fundamental discriminant: " + std::to_string(D));
  }
}

// Bernoulli polynomial B_k(x).
Rational bernoulli_poly(unsigned k, const Rational& x) {
  Rational acc(0);
  for (unsigned i = 0; i <= k; ++i) {
    acc += Rational(rigor::binomial(k, i)) * bernoulli(i) * rigor::pow(x, static_cast<long>(k - i));
  }
  return acc;
}

}  // namespace

bool is_fundamental_discriminant(long D) {
  if (D == 1) return true;
  long r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D);
  if (r != 0) return false;
  long m = D / 4;
  long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && squarefree(m);
}

int kronecker(long D, long n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "kronecker needs n >= 1");
  return mpz_kronecker_si(Integer(D).get_mpz_t(), n);
}

Interval dirichlet_L_enclosure(long D, const Interval& s, long precision_bits) {
  check_precision(precision_bits);
  require_fundamental(D);
  if (s.lo() <= 1) {
    throw Error(Errc::ArgumentNotGreaterThanOne, "L needs s > 1, got " + rigor::to_string(s));
  }
  long w = working_bits(precision_bits) + 16;
  // L(s, chi) = D^-s sum_{r=1}^{D-1} chi(r) zeta(s, r/D)
  Interval sum(0);
  for (long r = 1; r < D; ++r) {
    int c = kronecker(D, r);
    if (c == 0) continue;
    Interval h = hurwitz_zeta_enclosure(s, rigor::frac(r, D), w);
    sum = c > 0 ? sum + h : sum - h;
  }
  Interval scale = pow_enclosure(Interval(Rational(D)), -s, w);
  return (sum * scale).coarsen(precision_bits);
}

Rational generalized_bernoulli(long D, unsigned k) {
  require_fundamental(D);
  Rational acc(0);
  for (long a = 1; a <= D; ++a) {
    int c = kronecker(D, a);
    if (c == 0) continue;
    Rational b = bernoulli_poly(k, rigor::frac(a, D));
    acc += c > 0 ? b : Rational(-b);
  }
  return acc * rigor::pow(Rational(D), static_cast<long>(k) - 1);
}

Rational dirichlet_L_even_coefficient(long D, unsigned j) {
  // L(2j, chi) = (-1)^(1+j) sqrt(D)/2 (2 pi / D)^(2j) B_{2j,chi} / (2j)! for even primitive chi
  if (j < 1) throw Error(Errc::InvalidArgument, "j must be positive");
  Rational c = generalized_bernoulli(D, 2 * j) * pow2(2 * j) /
               (Rational(2) * rigor::pow(Rational(D), 2 * static_cast<long>(j)) * Rational(rigor::factorial(2 * j)));
  return j % 2 == 1 ? c : Rational(-c);
}

}  // namespace covcert::specfun
