#pragma once

#include <iosfwd>
#include <string>

#include "covcert/rigor/rational.hpp"

namespace covcert::rigor {

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// Field operations on such intervals are exact, so every arithmetic result
/// is the tightest enclosure of the image of its operands. Widening only
/// happens through coarsen() and through the transcendental enclosures that
/// call it.
class Interval {
 public:
  Interval() = default;
  Interval(Rational point);  // NOLINT(google-explicit-constructor): [r, r]
  Interval(long point) : Interval(Rational(point)) {}  // NOLINT
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
  bool is_positive() const { return lo_ > 0; }
  bool is_negative() const { return hi_ < 0; }

  /// Outward rounding of both endpoints to `bits` significant bits.
  Interval coarsen(long bits) const;

  /// Relative width |hi - lo| / min(|lo|, |hi|); infinite-like (returns
  /// width) when the interval touches zero.
  Rational relative_width() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

inline Interval exact(const Rational& r) { return Interval(r); }

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DivisionByIntervalContainingZero when 0 is in b.
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval abs(const Interval& a);
/// max(|lo|, |hi|)
Rational magnitude(const Interval& a);
/// Integer power; a negative exponent requires 0 outside a.
Interval pow(const Interval& a, long exponent);

Interval hull(const Interval& a, const Interval& b);
/// Throws InvalidArgument when the intervals are disjoint.
Interval intersect(const Interval& a, const Interval& b);
bool overlaps(const Interval& a, const Interval& b);

enum class ArithOp { Add, Sub, Mul, Div, Neg, Abs };
Interval arith(ArithOp op, const Interval& a, const Interval& b = Interval());

enum class Ordering { CertainlyLess, CertainlyGreater, Overlap };

/// CertainlyLess iff a.hi < b.lo, CertainlyGreater iff a.lo > b.hi.
Ordering compare(const Interval& a, const Interval& b);
std::string to_string(Ordering o);

/// "[lo, hi]" with exact endpoints.
std::string to_string(const Interval& x);
/// Midpoint with `significant` digits and the half-width, for reports.
std::string to_decimal(const Interval& x, int significant);

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace covcert::rigor
