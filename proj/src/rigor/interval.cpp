#include "covcert/rigor/interval.hpp"

#include <algorithm>
#include <ostream>

#include "covcert/error.hpp"

namespace covcert::rigor {

Interval::Interval(Rational point) : lo_(point), hi_(std::move(point)) {}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw Error(Errc::InvalidArgument, "interval with lo > hi: [" + to_string(lo_) + ", " + to_string(hi_) + "]");
  }
}

Interval Interval::coarsen(long bits) const {
  return Interval(round_down(lo_, bits), round_up(hi_, bits));
}

Rational Interval::relative_width() const {
  if (contains_zero()) return width();
  Rational m = lo_ > 0 ? lo_ : Rational(-hi_);
  return width() / m;
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo() + b.lo(), a.hi() + b.hi()); }

Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo() - b.hi(), a.hi() - b.lo()); }

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo() >= 0 && b.lo() >= 0) return Interval(a.lo() * b.lo(), a.hi() * b.hi());
  Rational p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return Interval(*mn, *mx);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw Error(Errc::DivisionByIntervalContainingZero, "divisor " + to_string(b));
  }
  return a * Interval(1 / b.hi(), 1 / b.lo());
}

Interval abs(const Interval& a) {
  if (a.lo() >= 0) return a;
  if (a.hi() <= 0) return -a;
  return Interval(0, std::max(Rational(-a.lo()), a.hi()));
}

Rational magnitude(const Interval& a) {
  Rational l = a.lo() < 0 ? Rational(-a.lo()) : a.lo();
  Rational h = a.hi() < 0 ? Rational(-a.hi()) : a.hi();
  return l < h ? h : l;
}

Interval pow(const Interval& a, long exponent) {
  if (exponent < 0) {
    if (a.contains_zero()) {
      throw Error(Errc::DivisionByIntervalContainingZero, "negative power of " + to_string(a));
    }
    return pow(Interval(1) / a, -exponent);
  }
  if (exponent == 0) return Interval(1);
  if (exponent % 2 == 1) return Interval(pow(a.lo(), exponent), pow(a.hi(), exponent));
  Interval m = abs(a);
  return Interval(pow(m.lo(), exponent), pow(m.hi(), exponent));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

bool overlaps(const Interval& a, const Interval& b) { return a.lo() <= b.hi() && b.lo() <= a.hi(); }

Interval intersect(const Interval& a, const Interval& b) {
  if (!overlaps(a, b)) {
    throw Error(Errc::InvalidArgument, "disjoint intervals " + to_string(a) + " and " + to_string(b));
  }
  return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval arith(ArithOp op, const Interval& a, const Interval& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
    case ArithOp::Abs: return abs(a);
  }
  throw Error(Errc::InvalidArgument, "unknown operation");
}

Ordering compare(const Interval& a, const Interval& b) {
  if (a.hi() < b.lo()) return Ordering::CertainlyLess;
  if (a.lo() > b.hi()) return Ordering::CertainlyGreater;
  return Ordering::Overlap;
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::CertainlyLess: return "CertainlyLess";
    case Ordering::CertainlyGreater: return "CertainlyGreater";
    case Ordering::Overlap: return "Overlap";
  }
  return "Overlap";
}

std::string to_string(const Interval& x) { return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]"; }

std::string to_decimal(const Interval& x, int significant) {
  if (x.is_point()) return to_decimal(x.lo(), significant);
  return "[" + to_decimal(x.lo(), significant) + ", " + to_decimal(x.hi(), significant) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_decimal(x, 12); }

}  // namespace covcert::rigor
