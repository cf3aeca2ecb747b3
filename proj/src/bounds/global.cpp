#include "covcert/bounds.hpp"
#include "covcert/error.hpp"
#include "covcert/specfun.hpp"

namespace covcert::bounds {

using rigor::frac;
using specfun::exp_enclosure;
using specfun::log_enclosure;
using specfun::pi_enclosure;
using specfun::pow_enclosure;

namespace {

long guard(long bits) { return bits + 16; }

Interval log_of(const Rational& x, long w) { return log_enclosure(Interval(x), w); }

// 7.6 e^0.46
Interval seven_six_e(long w) { return Interval(c_7_6()) * exp_enclosure(Interval(c_0_46()), w); }

Rational two_pow(long k) { return Rational(Integer(1) << static_cast<unsigned>(k)); }

// D^(k/2) for a positive integer D.
Interval half_power(long D, long k, long w) {
  Interval r(rigor::pow(Rational(D), k / 2));
  if (k % 2 != 0) r = r * specfun::sqrt_enclosure(Interval(Rational(D)), w);
  return r;
}

void check_pair(const OdlyzkoPair& p) {
  if (p.A <= 1 || p.E <= 0) throw Error(Errc::InvalidArgument, "Odlyzko pair needs A > 1 and E > 0");
}

}  // namespace

Interval S_lambda(const NumberFieldRecord& field, int n, long precision_bits) {
  if (n < 1) throw Error(Errc::InvalidArgument, "rank must be positive");
  long w = guard(precision_bits);
  Interval r = half_power(field.discriminant, static_cast<long>(n) * (2 * n + 1), w) *
               rigor::pow(Pi_n(n, w).value, field.degree);
  for (int j = 1; j <= n; ++j) r = r * numberfields::dedekind_zeta_enclosure(field, 2 * j, w);
  return r.coarsen(precision_bits);
}

std::optional<Rational> S_lambda_exact(const NumberFieldRecord& field, int n) {
  if (field.degree > 2) return std::nullopt;
  if (field.degree == 1) return Psi_exact(n);
  // D^(n(2n+1)/2) * c^2 pi^(-2n(n+1)) * prod c_j sqrt(D) pi^(4j): the powers
  // of pi cancel and D appears to the power n(n+1).
  Rational c = Pi_n(n, 64).coefficient;
  Rational r = c * c * rigor::pow(Rational(field.discriminant), static_cast<long>(n) * (n + 1));
  for (int j = 1; j <= n; ++j) r *= numberfields::dedekind_zeta_even_coefficient(field, static_cast<unsigned>(j));
  return r;
}

Interval quotient(const NumberFieldRecord& field, int n, long precision_bits) {
  long w = guard(precision_bits);
  Interval q = Interval(Psi_exact(n) * two_pow(2 * field.degree - 1)) / S_lambda(field, n, w);
  return q.coarsen(precision_bits);
}

std::optional<Rational> quotient_exact(const NumberFieldRecord& field, int n) {
  auto s = S_lambda_exact(field, n);
  if (!s) return std::nullopt;
  return Psi_exact(n) * two_pow(2 * field.degree - 1) / *s;
}

Interval adjusted_quotient(const Interval& q, const NumberFieldRecord& field, long unit_index) {
  if (unit_index < 1) throw Error(Errc::InvalidArgument, "unit index must be positive");
  return q * Interval(Rational(unit_index * field.class_number) / two_pow(2 * field.degree - 1));
}

Interval proto_D_bound(int n, int d, long h, long precision_bits) {
  if (n < 2 || d < 1 || h < 1) throw Error(Errc::InvalidArgument, "proto_D_bound needs n >= 2, d >= 1, h >= 1");
  long w = guard(precision_bits);
  Interval base = Interval(c_0915() * two_pow(2 * d) * h) * rigor::pow(Pi_n(n, w).value, 1 - d);
  Interval exponent(frac(2, 2 * n * n + n));
  return pow_enclosure(base, exponent, w).coarsen(precision_bits);
}

Interval F_bound(int d, const Interval& D, int n, long precision_bits) {
  if (d < 1 || D.lo() < 1) throw Error(Errc::InvalidArgument, "F_bound needs d >= 1 and D >= 1");
  long w = guard(precision_bits);
  Interval r = Interval(frac(1, 750)) * pow_enclosure(D, Interval(f_of_n(n)), w) *
               rigor::pow(seven_six_e(w) * Pi_n(n, w).value, d);
  return r.coarsen(precision_bits);
}

Interval O_bound(int n, int d, const OdlyzkoPair& pair, long precision_bits) {
  if (n < 2 || d < 1) throw Error(Errc::InvalidArgument, "O_bound needs n >= 2, d >= 1");
  check_pair(pair);
  long w = guard(precision_bits);
  Interval f(f_of_n(n));
  Interval inner = seven_six_e(w) * pow_enclosure(Interval(pair.A), f, w) * Pi_n(n, w).value;
  Interval r = Interval(frac(1, 750)) * exp_enclosure(-(Interval(pair.E) * f), w) * rigor::pow(inner, d);
  return r.coarsen(precision_bits);
}

Lemma35Verdicts lemma35_conditions(const OdlyzkoPair& pair, long precision_bits) {
  check_pair(pair);
  long w = guard(precision_bits);
  Interval logA = log_of(pair.A, w);
  Interval two_logA_minus_E = (Interval(2) * logA - Interval(pair.E)).coarsen(precision_bits);
  Interval log2pi = log_enclosure(Interval(2) * pi_enclosure(w), w);
  Interval a_rhs = (log2pi + Interval(1) - log_of(5, w)).coarsen(precision_bits);
  Interval c_rhs = ((log_of(c_9_47(), w) - log_enclosure(Pi_n(4, w).value, w)) / Interval(f_of_n(4)))
                       .coarsen(precision_bits);
  Lemma35Verdicts v{
      rigor::greater_eq("2 log A - E >= log 2pi + 1 - log 5", two_logA_minus_E, a_rhs),
      rigor::greater("A > 5.66", Interval(pair.A), Interval(c_5_66())),
      rigor::greater("2 log A - E > (log 9.47 - log Pi(4)) / f(4)", two_logA_minus_E, c_rhs),
      {}, {}, {}};
  v.ta = v.a.evaluate();
  v.tb = v.b.evaluate();
  v.tc = v.c.evaluate();
  return v;
}

Interval lemma35_b_value(const Rational& A, int n, long precision_bits) {
  long w = guard(precision_bits);
  Interval r = seven_six_e(w) * pow_enclosure(Interval(A), Interval(f_of_n(n)), w) * Pi_n(n, w).value;
  return r.coarsen(precision_bits);
}

Interval claim_a_log_ratio(int n, const OdlyzkoPair& pair, long precision_bits) {
  check_pair(pair);
  long w = guard(precision_bits);
  Interval r = -(Interval(pair.E) * Interval(Rational(2 * n) + frac(3, 2))) +
               Interval(4 * n + 3) * log_of(pair.A, w) + log_enclosure(Pi_ratio(n, w), w);
  return r.coarsen(precision_bits);
}

Interval claim_a_stirling_lower(int n, const OdlyzkoPair& pair, long precision_bits) {
  check_pair(pair);
  long w = guard(precision_bits);
  Interval two_pi = Interval(2) * pi_enclosure(w);
  Interval m(2 * n + 1);
  Interval r = -(Interval(pair.E) * Interval(Rational(2 * n) + frac(3, 2))) +
               Interval(4 * n + 3) * log_of(pair.A, w) - Interval(2 * n + 2) * log_enclosure(two_pi, w) +
               Interval(frac(1, 2)) * log_enclosure(two_pi * m, w) + m * log_enclosure(m, w) - m;
  return r.coarsen(precision_bits);
}

Interval n3_degree_threshold(const OdlyzkoPair& pair, long precision_bits) {
  check_pair(pair);
  long w = guard(precision_bits);
  Interval num = Interval(frac(15, 2) * pair.E - frac(33, 4));
  Interval den = Interval(frac(15, 2)) * log_of(pair.A, w) - Interval(frac(1299, 100));
  if (!den.is_positive()) {
    throw Error(Errc::DenominatorNotPositive, "7.5 log A - 12.99 is not certainly positive for A = " +
                                                  rigor::to_decimal(pair.A, 12));
  }
  return (num / den).coarsen(precision_bits);
}

Interval n3_D_bound(int d, long precision_bits) {
  if (d < 1) throw Error(Errc::InvalidArgument, "degree must be positive");
  long w = guard(precision_bits);
  Interval base = Interval(c_1372_5()) * rigor::pow(Pi_n(3, w).value, 1 - d) * rigor::pow(seven_six_e(w), -d);
  return pow_enclosure(base, Interval(frac(2, 15)), w).coarsen(precision_bits);
}

Interval n2_D_bound(int d, long precision_bits) {
  if (d < 1) throw Error(Errc::InvalidArgument, "degree must be positive");
  long w = guard(precision_bits);
  Interval base(Rational(11) * rigor::pow(c_0_00019(), -d) / 960);
  return pow_enclosure(base, Interval(1 / c_3_9()), w).coarsen(precision_bits);
}

}  // namespace covcert::bounds
