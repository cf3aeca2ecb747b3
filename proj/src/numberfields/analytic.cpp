#include <vector>

#include "covcert/error.hpp"
#include "covcert/numberfields.hpp"
#include "covcert/specfun.hpp"

namespace covcert::numberfields {

namespace {

using namespace covcert::specfun;

constexpr long kEulerPrimeBound = 100000;

std::vector<long> primes_up_to(long n) {
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (long k = i * i; k <= n; k += i) composite[k] = true;
  }
  return out;
}

unsigned even_index(int s) {
  if (s < 2 || s % 2 != 0 || s > 128) {
    throw Error(Errc::UnsupportedArgument, "s must be an even integer in [2, 128], got " + std::to_string(s));
  }
  return static_cast<unsigned>(s / 2);
}

}  // namespace

Interval zimmert_lower(int d, long precision_bits) {
  if (d < 1) throw Error(Errc::InvalidArgument, "degree must be positive");
  Interval e = exp_enclosure(Interval(rigor::frac(23L * d, 50)), precision_bits);
  return (Interval(rigor::frac(1, 25)) * e).coarsen(precision_bits);
}

Interval brauer_siegel_H(int d, const Interval& D, const Rational& t, long precision_bits) {
  if (t <= 0) throw Error(Errc::InvalidArgument, "t must be positive");
  if (d < 1 || D.lo() < 1) throw Error(Errc::InvalidArgument, "need d >= 1 and D >= 1");
  long w = precision_bits + 16;
  Interval s(t + 1);
  Interval half_s(Rational(s.lo() / 2));
  Interval g = gamma_enclosure(half_s, w);
  Interval pi_pow = pow_enclosure(pi_enclosure(w), half_s, w);
  Interval inner = g / (Interval(2) * pi_pow);
  Interval out = Interval(2 * t * (t + 1)) * pow(inner, d) * pow_enclosure(D, half_s, w) *
                 pow(zeta_real_enclosure(s, w), d);
  return out.coarsen(precision_bits);
}

Rational dedekind_zeta_even_coefficient(const NumberFieldRecord& field, unsigned j) {
  if (field.degree == 1) return zeta_even_exact(j);
  if (field.degree == 2) return zeta_even_exact(j) * dirichlet_L_even_coefficient(field.discriminant, j);
  throw Error(Errc::UnsupportedField, field.label + ": no closed form for zeta_K at even integers");
}

Interval dedekind_zeta_euler(const NumberFieldRecord& field, int s, long prime_bound, long precision_bits) {
  even_index(s);
  if (field.polynomial_index != 1) {
    throw Error(Errc::UnsupportedField, field.label + ": Euler product needs polynomial index 1");
  }
  long w = precision_bits + 48;
  Interval product(1);
  for (long p : primes_up_to(prime_bound)) {
    Rational factor = 1;
    for (const auto& place : factor_mod_p(field.polynomial, p)) {
      Rational qs = rigor::pow(Rational(p), static_cast<long>(place.degree) * s);
      factor *= qs / (qs - 1);
    }
    product = (product * Interval(factor)).coarsen(w);
  }
  // Primes above P contribute at most (1 - p^-s)^-d each.
  Rational P(prime_bound);
  Rational Ps = rigor::pow(P, s);
  Rational tail = Rational(field.degree) * P / Ps / ((s - 1) * (1 - 1 / Ps));
  Interval tail_factor(Rational(1), exp_enclosure(Interval(tail), w).hi());
  return (product * tail_factor).coarsen(precision_bits);
}

Interval dedekind_zeta_enclosure(const NumberFieldRecord& field, int s, long precision_bits) {
  unsigned j = even_index(s);
  long w = precision_bits + 16;
  Interval pi = pi_enclosure(w);
  if (field.degree == 1) {
    return (Interval(zeta_even_exact(j)) * pow(pi, s)).coarsen(precision_bits);
  }
  if (field.degree == 2) {
    Interval root = sqrt_enclosure(Interval(Rational(field.discriminant)), w);
    return (Interval(dedekind_zeta_even_coefficient(field, j)) * root * pow(pi, 2 * s)).coarsen(precision_bits);
  }
  return dedekind_zeta_euler(field, s, kEulerPrimeBound, precision_bits);
}

}  // namespace covcert::numberfields
