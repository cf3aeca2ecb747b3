#include "covcert/bounds.hpp"
#include "covcert/error.hpp"
#include "covcert/specfun.hpp"

namespace covcert::bounds {

using rigor::frac;

Rational c_0915() { return frac(183, 200); }
Rational c_1372_5() { return frac(2745, 2); }
Rational c_7_6() { return frac(38, 5); }
Rational c_0_46() { return frac(23, 50); }
Rational c_1_83() { return frac(183, 100); }
Rational c_0_00019() { return frac(19, 100000); }
Rational c_3_9() { return frac(39, 10); }
Rational c_5_66() { return frac(283, 50); }
Rational c_9_47() { return frac(947, 100); }

Rational f_of_n(int n) { return Rational(n * n - 3) + frac(n, 2); }

namespace {

void check_rank(int n) {
  if (n < 1 || n > 64) throw Error(Errc::InvalidArgument, "rank must be in [1, 64], got " + std::to_string(n));
}

}  // namespace

PiValue Pi_n(int n, long precision_bits) {
  check_rank(n);
  Rational c = 1;
  for (int j = 1; j <= n; ++j) {
    c *= Rational(rigor::factorial(2 * j - 1)) / Rational(Integer(1) << (2 * j));
  }
  long e = -static_cast<long>(n) * (n + 1);
  long w = precision_bits + 16;
  Interval v = (Interval(c) * rigor::pow(specfun::pi_enclosure(w), e)).coarsen(precision_bits);
  return {c, e, v};
}

Interval Pi_ratio(int n, long precision_bits) {
  check_rank(n);
  long w = precision_bits + 16;
  Interval two_pi = Interval(2) * specfun::pi_enclosure(w);
  return (Interval(Rational(rigor::factorial(2 * n + 1))) / rigor::pow(two_pi, 2 * n + 2)).coarsen(precision_bits);
}

Rational Psi_exact(int n) {
  check_rank(n);
  Rational r = Pi_n(n, 64).coefficient;
  for (int j = 1; j <= n; ++j) r *= specfun::zeta_even_exact(static_cast<unsigned>(j));
  return r;
}

Interval Psi_interval(int n, long precision_bits) {
  check_rank(n);
  long w = precision_bits + 16;
  Interval r = Pi_n(n, w).value;
  for (int j = 1; j <= n; ++j) r = r * specfun::zeta_real_enclosure(Interval(2 * j), w);
  return r.coarsen(precision_bits);
}

Interval zeta_product_partial(int J, bool with_tail, long precision_bits) {
  if (J < 1) throw Error(Errc::InvalidArgument, "J must be positive");
  long w = precision_bits + 16;
  Interval r(1);
  for (int j = 1; j <= J; ++j) r = r * specfun::zeta_real_enclosure(Interval(2 * j), w);
  if (with_tail) {
    // zeta(2j) - 1 <= 2^(1-2j) for j >= 2 and log(1 + x) <= x.
    Rational tail = Rational(2) / (3 * Rational(Integer(1) << (2 * J)));
    r = r * Interval(Rational(1), specfun::exp_enclosure(Interval(tail), w).hi());
  }
  return r.coarsen(precision_bits);
}

Rational zeta_product_upper() {
  static const Rational value = [] {
    Interval p = zeta_product_partial(20, true);
    if (!(p.hi() < c_1_83())) {
      throw Error(Errc::InvariantViolation, "prod zeta(2j) bound 1.83 not certified");
    }
    return c_1_83();
  }();
  return value;
}

}  // namespace covcert::bounds
