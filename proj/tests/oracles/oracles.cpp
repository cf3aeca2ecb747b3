#include "oracles/oracles.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <functional>
#include <vector>

namespace covcert::oracles {

using rigor::Integer;

namespace {

Rational to_rational(const mpfr_t x) {
  mpz_t m;
  mpz_init(m);
  mpfr_exp_t e = mpfr_get_z_2exp(m, x);
  Rational r{Integer(m)};
  mpz_clear(m);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

Interval widen(const Rational& v, long bits) {
  Rational eps = v;
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), static_cast<unsigned long>(bits - 16));
  if (eps < 0) eps = -eps;
  return Interval(v - eps, v + eps);
}

Interval eval(long bits, const std::function<void(mpfr_t)>& f) {
  mpfr_t y;
  mpfr_init2(y, bits);
  f(y);
  Rational v = to_rational(y);
  mpfr_clear(y);
  return widen(v, bits);
}

}  // namespace

Interval mpfr_pi(long bits) {
  return eval(bits, [](mpfr_t y) { mpfr_const_pi(y, MPFR_RNDN); });
}

#define COVCERT_UNARY_ORACLE(name, fn)                      \
  Interval name(const Rational& x, long bits) {             \
    return eval(bits, [&](mpfr_t y) {                       \
      mpfr_set_q(y, x.get_mpq_t(), MPFR_RNDN);              \
      fn(y, y, MPFR_RNDN);                                  \
    });                                                     \
  }

COVCERT_UNARY_ORACLE(mpfr_exp, mpfr_exp)
COVCERT_UNARY_ORACLE(mpfr_log, mpfr_log)
COVCERT_UNARY_ORACLE(mpfr_sqrt, mpfr_sqrt)
COVCERT_UNARY_ORACLE(mpfr_gamma, mpfr_gamma)
COVCERT_UNARY_ORACLE(mpfr_zeta, mpfr_zeta)

#undef COVCERT_UNARY_ORACLE

Interval mpfr_alpha(const Rational& s, long bits) {
  return eval(bits, [&](mpfr_t y) {
    mpfr_t half, pi, g, z;
    mpfr_inits2(bits + 32, half, pi, g, z, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(half, s.get_mpq_t(), MPFR_RNDN);
    mpfr_zeta(z, half, MPFR_RNDN);
    mpfr_div_ui(half, half, 2, MPFR_RNDN);
    mpfr_gamma(g, half, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_pow(pi, pi, half, MPFR_RNDN);
    mpfr_mul(g, g, z, MPFR_RNDN);
    mpfr_div(y, pi, g, MPFR_RNDN);
    mpfr_clears(half, pi, g, z, static_cast<mpfr_ptr>(nullptr));
  });
}

Rational bernoulli_akiyama_tanigawa(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
    }
  }
  return a[0];
}

std::pair<long, long> pell_bruteforce(long D) {
  for (long b = 1;; ++b) {
    for (long sign : {-4L, 4L}) {
      long a2 = D * b * b + sign;
      if (a2 <= 0) continue;
      Integer r;
      Integer v(a2);
      if (mpz_perfect_square_p(v.get_mpz_t())) {
        mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
        return {r.get_si(), b};
      }
    }
  }
}

Interval dirichlet_L_partial_sum(long D, long s, long K) {
  Rational sum(0);
  for (long k = 1; k <= K; ++k) {
    int c = mpz_kronecker_si(Integer(D).get_mpz_t(), k);
    if (c == 0) continue;
    Rational t = rigor::pow(Rational(k), -s);
    sum += c > 0 ? t : Rational(-t);
  }
  Rational tail = Rational(2 * D) * rigor::pow(Rational(K + 1), -s);
  return Interval(sum - tail, sum + tail);
}

long quadratic_ideal_count(long D, long m) {
  long count = 0;
  for (long d = 1; d <= m; ++d) {
    if (m % d == 0) count += mpz_kronecker_si(Integer(D).get_mpz_t(), d);
  }
  return count;
}

Interval cyclic_cubic7_L_norm(long s, long K) {
  // chi(3) = w generates the order-3 characters mod 7; L = A + B w.
  static const int exponent[7] = {-1, 0, 2, 1, 1, 2, 0};
  Rational A(0), B(0);
  for (long k = 1; k <= K; ++k) {
    int e = exponent[k % 7];
    if (e < 0) continue;
    Rational t = rigor::pow(Rational(k), -s);
    if (e == 0) {
      A += t;
    } else if (e == 1) {
      B += t;
    } else {  // w^2 = -1 - w
      A -= t;
      B -= t;
    }
  }
  Rational norm = A * A - A * B + B * B;
  // Partial character sums are at most 2 in modulus, so the tail is below
  // 4 (K+1)^-s; |L| < 2 bounds the cross term.
  Rational r = 4 * rigor::pow(Rational(K + 1), -s);
  Rational spread = 4 * r + r * r;
  return Interval(norm - spread, norm + spread);
}

namespace {

// Minimal RAII wrapper so the composite oracles read like the formulas.
class Real {
 public:
  explicit Real(long prec) { mpfr_init2(v_, prec); }
  Real(long prec, const Rational& q) : Real(prec) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Real& o) : Real(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

using Op2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using Op1 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real apply(Op2 f, const Real& a, const Real& b) {
  Real r(a.prec());
  f(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real apply(Op1 f, const Real& a) {
  Real r(a.prec());
  f(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, const Real& b) { return apply(mpfr_add, a, b); }
Real operator-(const Real& a, const Real& b) { return apply(mpfr_sub, a, b); }
Real operator*(const Real& a, const Real& b) { return apply(mpfr_mul, a, b); }
Real operator/(const Real& a, const Real& b) { return apply(mpfr_div, a, b); }
Real pow(const Real& a, const Real& b) { return apply(mpfr_pow, a, b); }
Real exp(const Real& a) { return apply(::mpfr_exp, a); }
Real log(const Real& a) { return apply(::mpfr_log, a); }
Real gamma(const Real& a) { return apply(::mpfr_gamma, a); }
Real zeta(const Real& a) { return apply(::mpfr_zeta, a); }

constexpr long kPrec = 544;

Real num(const Rational& q) { return Real(kPrec, q); }
Real num(long v) { return Real(kPrec, Rational(v)); }
Real dec(const char* s) { return Real(kPrec, rigor::parse_rational(s)); }
Real pi() {
  Real r(kPrec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Interval finish(const Real& x) { return widen(to_rational(x.get()), 512); }

Real Pi_of(int n) {
  Real r = num(1);
  Real two_pi = num(2) * pi();
  for (int j = 1; j <= n; ++j) {
    r = r * gamma(num(2 * j)) / pow(two_pi, num(2 * j));
  }
  return r;
}

Real f_of(int n) { return num(rigor::frac(2 * n * n + n - 6, 2)); }

}  // namespace

Interval mpfr_Pi(int n) { return finish(Pi_of(n)); }

Interval mpfr_proto_bound(int n, int d, long h) {
  Real base = dec("0.915") * num(1L << (2 * d)) * num(h) * pow(Pi_of(n), num(1 - d));
  return finish(pow(base, num(1) / num(rigor::frac(2 * n * n + n, 2))));
}

Interval mpfr_O(int n, int d, const Rational& A, const Rational& E) {
  Real inner = dec("7.6") * exp(dec("0.46")) * pow(num(A), f_of(n)) * Pi_of(n);
  Real r = exp(num(0) - num(E) * f_of(n)) * pow(inner, num(d)) / num(750);
  return finish(r);
}

Interval mpfr_F(int d, const Rational& D, int n) {
  Real r = pow(num(D), f_of(n)) * pow(dec("7.6") * exp(dec("0.46")) * Pi_of(n), num(d)) / num(750);
  return finish(r);
}

Interval mpfr_n3_threshold(const Rational& A, const Rational& E) {
  return finish((dec("7.5") * num(E) - dec("8.25")) / (dec("7.5") * log(num(A)) - dec("12.99")));
}

Interval mpfr_n3_D_bound(int d) {
  Real base = dec("1372.5") * pow(Pi_of(3), num(1 - d)) * pow(dec("7.6") * exp(dec("0.46")), num(-d));
  return finish(pow(base, num(1) / dec("7.5")));
}

Interval mpfr_n2_D_bound(int d) {
  Real base = num(11) * pow(dec("0.00019"), num(-d)) / num(960);
  return finish(pow(base, num(1) / dec("3.9")));
}

Interval mpfr_n2_rhs(const Rational& A, const Rational& E, const Rational& t) {
  Real T = num(t);
  Real s = T + num(1);
  Real eta = num(3) * exp(dec("0.46")) / (num(64) * pow(pi(), num(6)));
  Real standard = zeta(num(2)) * zeta(num(4)) * num(3) / (num(32) * pow(pi(), num(6)));
  Real alpha = pow(pi(), s / num(2)) / (gamma(s / num(2)) * zeta(s));
  Real log_x = num(E) * s / num(2) - num(5) * num(E) - log(num(25) * T * s);
  Real base = eta * pow(num(A), dec("4.5") - T / num(2)) * alpha;
  return finish((log(standard) - log_x) / log(base));
}

}  // namespace covcert::oracles
