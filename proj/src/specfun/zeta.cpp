#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "covcert/error.hpp"
#include "internal.hpp"

namespace covcert::specfun {

using namespace detail;

Rational bernoulli(unsigned n) {
  static std::vector<Rational> table{Rational(1)};
  static std::mutex mu;
  std::lock_guard lock(mu);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  while (table.size() <= n) {
    unsigned m = static_cast<unsigned>(table.size());
    if (m > 1 && m % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) {
      if (k > 1 && k % 2 == 1) continue;
      acc += Rational(rigor::binomial(m + 1, k)) * table[k];
    }
    table.push_back(-acc / (m + 1));
  }
  return table[n];
}

Rational zeta_even_exact(unsigned j) {
  if (j < 1 || j > 64) throw Error(Errc::InvalidArgument, "zeta_even_exact needs 1 <= j <= 64");
  Rational c = bernoulli(2 * j) * pow2(2 * j - 1) / Rational(rigor::factorial(2 * j));
  return j % 2 == 1 ? c : Rational(-c);
}

namespace {

bool is_small_integer(const Interval& s) {
  return s.is_point() && s.lo().get_den() == 1 && s.lo() <= 4096;
}

// log(k) for integers is reused heavily across a grid; cache per precision.
Interval log_integer(long k, long w) {
  static std::map<std::pair<long, long>, Interval> cache;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({w, k}); it != cache.end()) return it->second;
  }
  Interval v = log_point(Rational(k), w);
  std::lock_guard lock(mu);
  return cache.emplace(std::pair{w, k}, v).first->second;
}

// B_{2m} / (2m)!
Rational em_coefficient(unsigned m) {
  static std::vector<Rational> table;
  static std::mutex mu;
  std::lock_guard lock(mu);
  while (table.size() < m) {
    unsigned k = static_cast<unsigned>(table.size()) + 1;
    table.push_back(bernoulli(2 * k) / Rational(rigor::factorial(2 * k)));
  }
  return table[m - 1];
}

// x^(-s) for rational x > 0.
Interval neg_power(const Rational& x, const Interval& s, long w) {
  if (is_small_integer(s)) return Interval(rigor::pow(x, -s.lo().get_num().get_si()));
  Interval l = (x.get_den() == 1 && x.get_num().fits_slong_p()) ? log_integer(x.get_num().get_si(), w)
                                                                 : log_point(x, w);
  return exp_raw((-(s * l)).coarsen(w), w);
}

Interval hurwitz_raw(const Interval& s, const Rational& a, long w) {
  if (s.lo() <= 1) {
    throw Error(Errc::ArgumentNotGreaterThanOne, "zeta needs s > 1, got " + rigor::to_string(s));
  }
  if (a <= 0) throw Error(Errc::InvalidArgument, "Hurwitz zeta needs a > 0");
  long ww = w + 16;
  long N = 16 + ww / 6;
  bool exact = is_small_integer(s);

  // For integer a and non-integer s, k^-s is multiplicative, so only prime
  // powers need an exponential.
  std::map<long, Interval> prime_power;
  auto power_of = [&](const Rational& x) -> Interval {
    if (exact || x.get_den() != 1 || !x.get_num().fits_slong_p()) return neg_power(x, s, ww);
    long k = x.get_num().get_si();
    Interval r(1);
    for (long p = 2; p * p <= k; ++p) {
      while (k % p == 0) {
        auto it = prime_power.find(p);
        if (it == prime_power.end()) it = prime_power.emplace(p, neg_power(Rational(p), s, ww)).first;
        r = (r * it->second).coarsen(ww);
        k /= p;
      }
    }
    if (k > 1) {
      auto it = prime_power.find(k);
      if (it == prime_power.end()) it = prime_power.emplace(k, neg_power(Rational(k), s, ww)).first;
      r = (r * it->second).coarsen(ww);
    }
    return r;
  };

  Interval sum(0);
  for (long k = 0; k < N; ++k) {
    sum = sum + power_of(a + k);
    if (!exact) sum = sum.coarsen(ww);
  }
  Rational X = a + N;
  Interval xs = power_of(X);  // X^-s
  Interval one(1);
  // Integral tail X^(1-s)/(s-1) and the half end term.
  sum = sum + Interval(X) * xs / (s - one) + xs / Interval(2);

  // Euler-Maclaurin corrections B_{2m}/(2m)! * s(s+1)...(s+2m-2) * X^(-s-2m+1).
  // The remainder after M corrections is at most the M-th correction in
  // absolute value, since |B_{2M}({x})| <= |B_{2M}|.
  Interval rising = s;                     // s(s+1)...(s+2m-2)
  Interval xpow = (xs / Interval(X)).coarsen(ww);  // X^(-s-2m+1)
  Rational inv_x2 = 1 / (X * X);
  Rational eps = pow2(-ww) * (sum.lo() > 0 ? sum.lo() : Rational(1));
  Rational last(0);
  for (unsigned m = 1;; ++m) {
    Interval term = (Interval(em_coefficient(m)) * rising * xpow).coarsen(ww);
    sum = (sum + term).coarsen(ww);
    Rational mag = rigor::magnitude(term);
    last = mag;
    if (mag < eps || m > 400) break;
    rising = (rising * (s + Interval(2 * m - 1)) * (s + Interval(2 * m))).coarsen(ww);
    xpow = (xpow * Interval(inv_x2)).coarsen(ww);
  }
  return (sum + Interval(-last, last)).coarsen(w);
}

}  // namespace

Interval hurwitz_zeta_enclosure(const Interval& s, const Rational& a, long precision_bits) {
  check_precision(precision_bits);
  return hurwitz_raw(s, a, working_bits(precision_bits)).coarsen(precision_bits);
}

Interval zeta_real_enclosure(const Interval& s, long precision_bits) {
  return hurwitz_zeta_enclosure(s, Rational(1), precision_bits);
}

Interval alpha_enclosure(const Interval& s, long precision_bits) {
  check_precision(precision_bits);
  if (s.lo() <= 1) {
    throw Error(Errc::ArgumentNotGreaterThanOne, "alpha needs s > 1, got " + rigor::to_string(s));
  }
  long w = working_bits(precision_bits) + 8;
  Interval half = s / Interval(2);
  Interval pi_pow = exp_raw((half * log_raw(pi_raw(w), w)).coarsen(w), w);
  Interval g = gamma_enclosure(half, w);
  Interval z = hurwitz_raw(s, Rational(1), w);
  return (pi_pow / (g * z)).coarsen(precision_bits);
}

}  // namespace covcert::specfun
