#include <map>
#include <mutex>

#include "covcert/error.hpp"
#include "internal.hpp"

namespace covcert::specfun {

namespace detail {

Rational pow2(long k) {
  Rational r(1);
  if (k >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-k));
  }
  return r;
}

void check_precision(long precision_bits) {
  if (precision_bits < 16) throw Error(Errc::InvalidArgument, "precision below 16 bits");
}

namespace {

// Per-precision caches. Keys are the exact working precision so that a
// result never depends on which precision happened to be requested first.
template <typename F>
Interval cached(std::map<long, Interval>& cache, std::mutex& mu, long w, F compute) {
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(w); it != cache.end()) return it->second;
  }
  Interval v = compute();
  std::lock_guard lock(mu);
  return cache.emplace(w, v).first->second;
}

// sum_{i>=0} z^(2i+1)/(2i+1) for 0 <= z < 1/2.
Interval atanh_series(const Rational& z, long w) {
  if (z == 0) return Interval(0);
  Interval z2 = Interval(z * z).coarsen(w);
  Interval power = Interval(z).coarsen(w);
  Interval sum = power;
  Rational eps = pow2(-w) * z;
  for (long i = 1;; ++i) {
    power = (power * z2).coarsen(w);
    sum = (sum + power / Interval(2 * i + 1)).coarsen(w);
    if (power.hi() < eps) break;
  }
  // Remaining terms are below power * z^2 / (1 - z^2) <= power * 4/3 * z^2.
  Rational tail = power.hi() * z2.hi() * rigor::frac(4, 3);
  return (sum + Interval(0, tail)).coarsen(w);
}

// atan(1/x) = sum (-1)^i / ((2i+1) x^(2i+1)); alternating with decreasing
// terms, so the partial sums bracket the limit.
Rational atan_inv_partial(long x, long terms) {
  Rational sum(0);
  Integer power(x);
  Integer x2(x * x);
  for (long i = 0; i < terms; ++i) {
    Rational t(Integer(1), power * (2 * i + 1));
    sum += (i % 2 == 0) ? t : Rational(-t);
    power *= x2;
  }
  return sum;
}

Interval atan_inv(long x, long w) {
  // Enough terms that x^(2i+1) exceeds 2^(w+8).
  long terms = 1;
  Integer power(x);
  Integer bound = Integer(1) << static_cast<unsigned>(w + 8);
  while (power < bound) {
    power *= x * x;
    ++terms;
  }
  Rational a = atan_inv_partial(x, terms);
  Rational b = atan_inv_partial(x, terms + 1);
  return Interval(a < b ? a : b, a < b ? b : a);
}

}  // namespace

Interval pi_raw(long w) {
  static std::map<long, Interval> cache;
  static std::mutex mu;
  return cached(cache, mu, w, [w] {
    Interval p = Interval(16) * atan_inv(5, w + 8) - Interval(4) * atan_inv(239, w + 8);
    return p.coarsen(w);
  });
}

Interval log2_raw(long w) {
  static std::map<long, Interval> cache;
  static std::mutex mu;
  return cached(cache, mu, w, [w] { return (Interval(2) * atanh_series(rigor::frac(1, 3), w + 8)).coarsen(w); });
}

Interval exp_point(const Rational& r, long w) {
  if (r == 0) return Interval(1);
  Rational a = r < 0 ? Rational(-r) : r;
  long s = std::max(0L, rigor::magnitude_bits(a) + 8);
  long ww = w + s + 8;
  Rational y = a * pow2(-s);
  Interval yi = Interval(y).coarsen(ww);
  Interval term(1);
  Interval sum(1);
  Rational eps = pow2(-ww);
  for (long k = 1;; ++k) {
    term = (term * yi / Interval(k)).coarsen(ww);
    sum = sum + term;
    if (term.hi() < eps) break;
  }
  // Positive tail below term * y / (1 - y) <= 2 term y.
  sum = (sum + Interval(0, 2 * term.hi() * yi.hi())).coarsen(ww);
  for (long i = 0; i < s; ++i) sum = (sum * sum).coarsen(ww);
  if (r < 0) sum = Interval(1) / sum;
  return sum.coarsen(w);
}

Interval log_point(const Rational& r, long w) {
  if (r <= 0) throw Error(Errc::LogOfNonPositive, "log of " + rigor::to_string(r));
  if (r == 1) return Interval(0);
  long k = rigor::magnitude_bits(r);
  if (r < pow2(k)) --k;
  Rational m = r * pow2(-k);  // [1, 2)
  if (m >= rigor::frac(4, 3)) {
    ++k;
    m /= 2;  // [2/3, 1)
  }
  long kbits = k == 0 ? 0 : static_cast<long>(mpz_sizeinbase(Integer(k).get_mpz_t(), 2));
  long ww = w + 8 + kbits;
  Rational z = (m - 1) / (m + 1);
  Interval at = z < 0 ? -atanh_series(-z, ww) : atanh_series(z, ww);
  Interval out = Interval(2) * at;
  if (k != 0) out = out + Interval(k) * log2_raw(ww);
  return out.coarsen(w);
}

Interval sqrt_point(const Rational& r, long w) {
  if (r < 0) throw Error(Errc::NonPositiveArgument, "sqrt of " + rigor::to_string(r));
  if (r == 0) return Interval(0);
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    Integer a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    return Interval(rigor::frac(a, b));
  }
  // sqrt(num/den) = sqrt(num * den * 4^K) / (den * 2^K)
  Integer nd = num * den;
  long bits = static_cast<long>(mpz_sizeinbase(nd.get_mpz_t(), 2));
  long K = std::max(0L, w - bits / 2 + 2);
  Integer big = nd << static_cast<unsigned>(2 * K);
  Integer q;
  mpz_sqrt(q.get_mpz_t(), big.get_mpz_t());
  Integer scale = den << static_cast<unsigned>(K);
  return Interval(rigor::frac(q, scale), rigor::frac(q + 1, scale));
}

namespace {
// Below this relative width one evaluation plus a derivative bound is used.
bool narrow(const Interval& x, long) {
  if (x.is_point()) return false;
  return x.width() <= pow2(-20);
}
}  // namespace

Interval exp_raw(const Interval& x, long w) {
  if (x.is_point()) return exp_point(x.lo(), w);
  if (narrow(x, w)) {
    // e^d <= 1 + d + d^2 for 0 <= d <= 1.
    Rational d = x.width();
    return (exp_point(x.lo(), w) * Interval(1, 1 + d + d * d)).coarsen(w);
  }
  return Interval(exp_point(x.lo(), w).lo(), exp_point(x.hi(), w).hi());
}

Interval log_raw(const Interval& x, long w) {
  if (x.lo() <= 0) throw Error(Errc::LogOfNonPositive, "log of " + rigor::to_string(x));
  if (x.is_point()) return log_point(x.lo(), w);
  Rational rel = x.width() / x.lo();
  if (rel <= pow2(-20)) {
    // log(b) - log(a) = log(1 + (b-a)/a) <= (b-a)/a.
    return (log_point(x.lo(), w) + Interval(0, rel)).coarsen(w);
  }
  return Interval(log_point(x.lo(), w).lo(), log_point(x.hi(), w).hi());
}

Interval sqrt_raw(const Interval& x, long w) {
  if (x.lo() < 0) throw Error(Errc::NonPositiveArgument, "sqrt of " + rigor::to_string(x));
  if (x.is_point()) return sqrt_point(x.lo(), w);
  return Interval(sqrt_point(x.lo(), w).lo(), sqrt_point(x.hi(), w).hi());
}

}  // namespace detail

using namespace detail;

Interval pi_enclosure(long precision_bits) {
  check_precision(precision_bits);
  return pi_raw(working_bits(precision_bits)).coarsen(precision_bits);
}

Interval exp_enclosure(const Interval& x, long precision_bits) {
  check_precision(precision_bits);
  return exp_raw(x, working_bits(precision_bits)).coarsen(precision_bits);
}

Interval log_enclosure(const Interval& x, long precision_bits) {
  check_precision(precision_bits);
  return log_raw(x, working_bits(precision_bits)).coarsen(precision_bits);
}

Interval sqrt_enclosure(const Interval& x, long precision_bits) {
  check_precision(precision_bits);
  Interval r = sqrt_raw(x, working_bits(precision_bits));
  return r.is_point() ? r : r.coarsen(precision_bits);
}

Interval pow_enclosure(const Interval& base, const Interval& exponent, long precision_bits) {
  check_precision(precision_bits);
  if (exponent.is_point() && exponent.lo().get_den() == 1 && exponent.lo().get_num().fits_slong_p()) {
    return rigor::pow(base, exponent.lo().get_num().get_si());
  }
  if (base.lo() <= 0) {
    throw Error(Errc::NonPositiveArgument, "non-integer power of " + rigor::to_string(base));
  }
  long w = working_bits(precision_bits);
  Interval l = log_raw(base, w);
  return exp_raw((exponent * l).coarsen(w), w).coarsen(precision_bits);
}

}  // namespace covcert::specfun
