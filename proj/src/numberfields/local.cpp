#include "covcert/error.hpp"
#include "covcert/numberfields.hpp"
#include "covcert/specfun.hpp"

namespace covcert::numberfields {

std::string to_string(SplitKind k) {
  switch (k) {
    case SplitKind::Split: return "split";
    case SplitKind::Inert: return "inert";
    case SplitKind::Ramified: return "ramified";
    case SplitKind::Partial: return "partial";
  }
  return "?";
}

SplittingType splitting_type(const NumberFieldRecord& field, long p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  Integer P(p);
  SplittingType out{p, SplitKind::Split, {}};
  if (field.degree == 1) {
    out.places.push_back({1, 1, P});
    return out;
  }
  if (field.degree == 2) {
    switch (specfun::kronecker(field.discriminant, p)) {
      case 1:
        out.places = {{1, 1, P}, {1, 1, P}};
        break;
      case -1:
        out.kind = SplitKind::Inert;
        out.places = {{1, 2, P * P}};
        break;
      default:
        out.kind = SplitKind::Ramified;
        out.places = {{2, 1, P}};
        break;
    }
    return out;
  }
  if (field.polynomial_index % p == 0) {
    throw Error(Errc::UnsupportedArgument, field.label + ": " + std::to_string(p) + " divides the polynomial index");
  }
  bool ramified = false, all_degree_one = true;
  for (const auto& factor : factor_mod_p(field.polynomial, p)) {
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(factor.degree));
    out.places.push_back({factor.multiplicity, factor.degree, q});
    ramified = ramified || factor.multiplicity > 1;
    all_degree_one = all_degree_one && factor.degree == 1;
  }
  if (ramified) {
    out.kind = SplitKind::Ramified;
  } else if (all_degree_one) {
    out.kind = SplitKind::Split;
  } else if (out.places.size() == 1) {
    out.kind = SplitKind::Inert;
  } else {
    out.kind = SplitKind::Partial;
  }
  return out;
}

bool padic_square_test(const Integer& x, long p) {
  if (x == 0) throw Error(Errc::InvalidArgument, "padic_square_test needs x != 0");
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  Integer u = x;
  long v = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p))) {
    u /= p;
    ++v;
  }
  if (v % 2 != 0) return false;
  if (p == 2) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return r == 1;
  }
  Integer P(p);
  return mpz_legendre(u.get_mpz_t(), P.get_mpz_t()) == 1;
}

}  // namespace covcert::numberfields
