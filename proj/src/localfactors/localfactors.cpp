#include "covcert/localfactors.hpp"

#include "covcert/error.hpp"

namespace covcert::localfactors {

using rigor::frac;

namespace {

void require_q(const Integer& q) {
  if (q < 2) throw Error(Errc::InvalidArgument, "residue cardinality must be at least 2");
}

bool is_prime_power(const Integer& q) {
  if (q < 2) return false;
  Integer root;
  for (unsigned long k = 1; k <= mpz_sizeinbase(q.get_mpz_t(), 2); ++k) {
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0 && mpz_probab_prime_p(root.get_mpz_t(), 30) > 0) {
      return true;
    }
  }
  return false;
}

Integer ipow(const Integer& q, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), k);
  return r;
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Hyperspecial: return "hyperspecial";
    case Kind::SpecialNonhyperspecial: return "special_nonhyperspecial";
    case Kind::NonspecialRank2Levi: return "nonspecial_rank2_levi";
  }
  return "?";
}

Rational T_factor(const Integer& q) {
  require_q(q);
  return frac(ipow(q, 4) - 1, 2 * (q + 1));
}

Integer eprime_special(int n, const Integer& q) {
  require_q(q);
  if (n < 2) throw Error(Errc::InvalidArgument, "rank must be at least 2");
  Integer r = 1;
  if (n % 2 == 1) {
    for (int j = 1; j <= n; ++j) r *= ipow(q, j) + (j % 2 == 0 ? 1 : -1);
  } else {
    for (int j = 1; j <= n / 2; ++j) r *= ipow(q, 4 * j - 2) - 1;
  }
  return r;
}

Rational h_rigidity_exact(const Integer& q, int n) {
  require_q(q);
  if (n < 1) throw Error(Errc::InvalidArgument, "rank must be at least 1");
  Rational r = frac(ipow(q, n + 1), q + 1);
  for (int j = 1; j <= n; ++j) r *= 1 - frac(1, ipow(q, 2 * j));
  return r;
}

Interval h_rigidity(const Integer& q, int n) { return Interval(h_rigidity_exact(q, n)); }

rigor::Comparison nonspecial_gt_two(const Integer& q, int n) {
  require_q(q);
  if (n < 2) throw Error(Errc::InvalidArgument, "rank must be at least 2");
  bool smallest = q == 2 && n == 2;
  Rational bound = smallest ? T_factor(q) : h_rigidity_exact(q, n);
  std::string what = smallest ? "T(2)" : "h(" + q.get_str() + "," + std::to_string(n) + ")";
  return rigor::greater(what + " / #Xi > 1", Interval(bound / kXiBound), Interval(1));
}

LocalFactor make_factor(const Integer& q, int n, Kind kind) {
  if (!is_prime_power(q)) throw Error(Errc::InvalidArgument, "q = " + q.get_str() + " is not a prime power");
  if (n < 1) throw Error(Errc::InvalidArgument, "rank must be at least 1");
  switch (kind) {
    case Kind::Hyperspecial:
      return {q, n, kind, Interval(1)};
    case Kind::SpecialNonhyperspecial:
      return {q, n, kind, Interval(Rational(eprime_special(n, q)))};
    case Kind::NonspecialRank2Levi:
      if (n != 2) throw Error(Errc::InvalidArgument, "this Levi type only occurs in rank 2");
      return {q, n, kind, Interval(T_factor(q))};
  }
  throw Error(Errc::InvalidArgument, "unknown parahoric kind");
}

LocalFactor rank2_factor(const Integer& q, const Rational& value) {
  if (value == 1) return make_factor(q, 2, Kind::Hyperspecial);
  if (value == T_factor(q)) return make_factor(q, 2, Kind::NonspecialRank2Levi);
  throw Error(Errc::InvariantViolation,
              "rank 2 factor at q = " + q.get_str() + " must be 1 or T(q), got " + rigor::to_string(value));
}

rigor::Comparison exclusion_inequality(const std::vector<LocalFactor>& factors) {
  Interval product(1);
  long nontrivial = 0;
  for (const auto& f : factors) {
    product = product * f.value;
    if (f.kind != Kind::Hyperspecial) ++nontrivial;
  }
  Integer rhs = 5 * ipow(2, static_cast<unsigned long>(nontrivial));
  return rigor::greater("prod e' > 5 * 2^" + std::to_string(nontrivial), product, Interval(Rational(rhs)));
}

LocalExclusion qsqrt5_local_exclusion(const numberfields::NumberFieldRecord& field) {
  if (field.degree != 2 || field.discriminant != 5) {
    throw Error(Errc::UnsupportedField, "the local argument is specific to Q(sqrt 5)");
  }
  LocalExclusion out;
  out.small_residue_fields_absent = true;
  for (long p : {2L, 3L}) {
    auto st = numberfields::splitting_type(field, p);
    for (const auto& place : st.places) {
      if (place.q == 2 || place.q == 3) out.small_residue_fields_absent = false;
      out.checks.push_back(rigor::greater("q above " + std::to_string(p) + " exceeds 3", Interval(Rational(place.q)),
                                          Interval(3)));
    }
    out.places.push_back(std::move(st));
  }
  // T is increasing for q >= 1, so T(4) bounds every remaining factor.
  out.checks.push_back(rigor::greater("T(4) / 2 > 5", Interval(T_factor(4) / 2), Interval(5)));
  bool all = out.small_residue_fields_absent;
  for (const auto& c : out.checks) all = all && c.evaluate() == rigor::Truth::Holds;
  out.excluded_given_parity_axiom = all;
  return out;
}

}  // namespace covcert::localfactors
