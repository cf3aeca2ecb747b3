#pragma once

// Point evaluations at a working precision; callers coarsen the result.

#include "covcert/specfun.hpp"

namespace covcert::specfun::detail {

inline long working_bits(long precision_bits) { return precision_bits + 32; }

Rational pow2(long k);

Interval exp_point(const Rational& r, long w);
Interval log_point(const Rational& r, long w);
Interval sqrt_point(const Rational& r, long w);
Interval pi_raw(long w);
Interval log2_raw(long w);

/// Interval versions without the final coarsening.
Interval exp_raw(const Interval& x, long w);
Interval log_raw(const Interval& x, long w);
Interval sqrt_raw(const Interval& x, long w);

Interval lgamma_point(const Rational& r, long w, long* shift);

void check_precision(long precision_bits);

}  // namespace covcert::specfun::detail
