#include "covcert/rigor/rational.hpp"

#include <cmath>
#include <string>

#include "covcert/error.hpp"

namespace covcert::rigor {

namespace {

Integer pow10(long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// r * 2^k as an exact rational.
Rational scale2(const Rational& r, long k) {
  Rational out;
  if (k >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
  } else {
    mpq_div_2exp(out.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-k));
  }
  return out;
}

}  // namespace

Rational canonical(Rational r) {
  r.canonicalize();
  return r;
}

Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Rational {
    throw Error(Errc::InvalidArgument, "cannot parse rational '" + s + "'");
  };
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) return fail();
    if (r.get_den() == 0) return fail();
    r.canonicalize();
    return r;
  }

  long exponent = 0;
  std::string mantissa = s;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) return fail();
    } catch (const std::exception&) {
      return fail();
    }
  }
  bool negative = false;
  std::size_t pos = 0;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    pos = 1;
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (; pos < mantissa.size(); ++pos) {
    char c = mantissa[pos];
    if (c == '.') {
      if (seen_point) return fail();
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();

  Rational r{Integer(digits, 10)};
  long shift = exponent - fraction_digits;
  if (shift >= 0) {
    r *= Rational(pow10(shift));
  } else {
    r /= Rational(pow10(-shift));
  }
  if (negative) r = -r;
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int significant) {
  if (significant < 1) significant = 1;
  if (r == 0) return "0";
  Rational a = abs(r);
  // Estimate the decimal exponent from the binary one, then correct.
  long e10 = static_cast<long>(std::floor(static_cast<double>(magnitude_bits(a)) * 0.30102999566398120));
  auto scaled = [&](long exp10) {
    // a * 10^(significant - 1 - exp10)
    long k = significant - 1 - exp10;
    Rational v = a;
    if (k >= 0) {
      v *= Rational(pow10(k));
    } else {
      v /= Rational(pow10(-k));
    }
    return v;
  };
  Integer lower = pow10(significant - 1);
  Integer upper = pow10(significant);
  for (int guard = 0; guard < 8; ++guard) {
    Rational v = scaled(e10);
    if (v < Rational(lower)) {
      --e10;
    } else if (v >= Rational(upper)) {
      ++e10;
    } else {
      break;
    }
  }
  Rational v = scaled(e10);
  Integer m = floor_div(v.get_num() * 2 + v.get_den(), v.get_den() * 2);
  if (m == upper) {
    m = lower;
    ++e10;
  }
  std::string digits = m.get_str();
  std::string out = r < 0 ? "-" : "";
  if (e10 >= -5 && e10 < significant) {
    if (e10 >= 0) {
      out += digits.substr(0, static_cast<std::size_t>(e10) + 1);
      std::string rest = digits.substr(static_cast<std::size_t>(e10) + 1);
      while (!rest.empty() && rest.back() == '0') rest.pop_back();
      if (!rest.empty()) out += "." + rest;
    } else {
      std::string rest = std::string(static_cast<std::size_t>(-e10 - 1), '0') + digits;
      while (!rest.empty() && rest.back() == '0') rest.pop_back();
      out += "0." + rest;
    }
    return out;
  }
  std::string rest = digits.substr(1);
  while (!rest.empty() && rest.back() == '0') rest.pop_back();
  out += digits.substr(0, 1);
  if (!rest.empty()) out += "." + rest;
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%+03ld", e10);
  return out + buf;
}

double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  long e = magnitude_bits(r);
  if (e > 1100) return r > 0 ? HUGE_VAL : -HUGE_VAL;
  if (e < -1100) return 0.0;
  // Scale into the double range first so huge numerators do not overflow.
  Rational scaled = scale2(r, -e);
  return std::ldexp(scaled.get_d(), static_cast<int>(e));
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(Errc::DivisionByIntervalContainingZero, "0 to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out.canonicalize();
  return out;
}

Integer floor(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }

Integer ceil(const Rational& r) { return ceil_div(r.get_num(), r.get_den()); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

long magnitude_bits(const Rational& r) {
  return static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
}

Rational round_down(const Rational& r, long bits) {
  if (r == 0) return r;
  if (r.get_den() == 1 && static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) <= bits) return r;
  long k = bits - magnitude_bits(r);
  Rational s = scale2(r, k);
  return scale2(Rational(floor_div(s.get_num(), s.get_den())), -k);
}

Rational round_up(const Rational& r, long bits) {
  if (r == 0) return r;
  if (r.get_den() == 1 && static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) <= bits) return r;
  long k = bits - magnitude_bits(r);
  Rational s = scale2(r, k);
  return scale2(Rational(ceil_div(s.get_num(), s.get_den())), -k);
}

}  // namespace covcert::rigor
