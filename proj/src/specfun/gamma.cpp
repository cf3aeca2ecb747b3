#include <algorithm>

#include "covcert/error.hpp"
#include "internal.hpp"

namespace covcert::specfun {

namespace detail {

// log Gamma(r) for rational r > 0 via the Stirling series at z = r + m,
// m chosen so that z >= max(8, w/4). The first omitted series term bounds
// the truncation error for real z > 0. Returns log Gamma(z); *shift gets m.
Interval lgamma_point(const Rational& r, long w, long* shift) {
  long target = std::max(8L, w / 4);
  long m = 0;
  if (r < target) m = rigor::ceil(Rational(target) - r).get_si();
  Rational z = r + m;
  *shift = m;

  long ww = w + 16 + std::max(0L, rigor::magnitude_bits(z));
  Interval lz = log_point(z, ww);
  Interval log2pi = log2_raw(ww) + log_raw(pi_raw(ww), ww);
  Interval s = (Interval(z - rigor::frac(1, 2)) * lz - Interval(z) + log2pi / Interval(2)).coarsen(ww);

  Interval inv_z = (Interval(1) / Interval(z)).coarsen(ww);
  Interval inv_z2 = (inv_z * inv_z).coarsen(ww);
  Interval power = inv_z;  // z^-(2k-1)
  Rational eps = pow2(-ww);
  for (unsigned k = 1;; ++k) {
    Rational c = bernoulli(2 * k) / (Rational(2 * k) * (2 * k - 1));
    Interval term = (Interval(c) * power).coarsen(ww);
    Rational mag = rigor::magnitude(term);
    if (mag < eps || k > 4 * static_cast<unsigned>(target)) {
      // This term is the first omitted one.
      s = s + Interval(-mag, mag);
      break;
    }
    s = (s + term).coarsen(ww);
    power = (power * inv_z2).coarsen(ww);
  }
  return s.coarsen(ww);
}

namespace {

Interval gamma_point(const Rational& r, long w) {
  if (r <= 0) throw Error(Errc::NonPositiveArgument, "Gamma at " + rigor::to_string(r));
  if (r.get_den() == 1 && r <= 64) {
    return Interval(Rational(rigor::factorial(r.get_num().get_ui() - 1)));
  }
  long m = 0;
  Interval lg = lgamma_point(r, w + 8, &m);
  long ww = w + 8 + std::max(0L, rigor::magnitude_bits(lg.hi()));
  Interval g = exp_raw(lg, ww);
  Rational rising(1);
  for (long i = 0; i < m; ++i) rising *= r + i;
  return (g / Interval(rising)).coarsen(w);
}

}  // namespace

}  // namespace detail

using namespace detail;

Interval gamma_enclosure(const Interval& x, long precision_bits) {
  check_precision(precision_bits);
  if (x.lo() <= 0) throw Error(Errc::NonPositiveArgument, "Gamma at " + rigor::to_string(x));
  long w = working_bits(precision_bits);
  if (x.is_point()) {
    Interval g = gamma_point(x.lo(), w);
    return g.is_point() ? g : g.coarsen(precision_bits);
  }
  // Gamma decreases up to its minimum near 1.46163 and increases after.
  const Rational left = rigor::frac(14616, 10000);
  const Rational right = rigor::frac(14617, 10000);
  Interval a = gamma_point(x.lo(), w);
  Interval b = gamma_point(x.hi(), w);
  if (x.hi() <= left) return Interval(b.lo(), a.hi()).coarsen(precision_bits);
  if (x.lo() >= right) return Interval(a.lo(), b.hi()).coarsen(precision_bits);
  // Minimum value 0.885603...; convexity puts the maximum at an endpoint.
  Rational hi = std::max(a.hi(), b.hi());
  return Interval(rigor::frac(8856, 10000), hi).coarsen(precision_bits);
}

StirlingBounds stirling_bounds(unsigned long n, long precision_bits) {
  check_precision(precision_bits);
  if (n == 0) throw Error(Errc::InvalidArgument, "stirling_bounds needs n >= 1");
  long w = working_bits(precision_bits) + 16;
  Rational nn(static_cast<long>(n));
  Interval base = Interval(nn) * log_point(nn, w) - Interval(nn);
  Interval root = sqrt_raw(Interval(2 * static_cast<long>(n)) * pi_raw(w), w);
  Interval lower = root * exp_raw((base + Interval(rigor::frac(1, 12 * static_cast<long>(n) + 1))).coarsen(w), w);
  Interval upper = root * exp_raw((base + Interval(rigor::frac(1, 12 * static_cast<long>(n)))).coarsen(w), w);
  return {lower.coarsen(precision_bits), upper.coarsen(precision_bits)};
}

}  // namespace covcert::specfun
