#include <doctest.h>

#include <functional>

#include "covcert/error.hpp"
#include "covcert/localfactors.hpp"

using namespace covcert;
using namespace covcert::localfactors;
using rigor::frac;
using rigor::Truth;

namespace {

const std::string kData = COVCERT_TEST_DATA_DIR;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

bool throws(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error&) {
    return true;
  }
  return false;
}

// From group orders: #Sp_4(F_q) = q^4 (q^2 - 1)(q^4 - 1), #SL_2(F_q) =
// q (q^2 - 1), #O_2^-(F_q) = 2 (q + 1), and the dimension gap 10 - 4 = 6.
Rational T_from_group_orders(long q) {
  Integer Q(q);
  Integer sp4 = Q * Q * Q * Q * (Q * Q - 1) * (Q * Q * Q * Q - 1);
  Integer levi = Q * (Q * Q - 1) * 2 * (Q + 1);
  return rigor::frac(sp4, levi * Q * Q * Q);
}

double h_double(long q, int n) {
  double r = 1;
  for (int k = 0; k <= n; ++k) r *= q;
  r /= (q + 1);
  for (int j = 1; j <= n; ++j) {
    double p = 1;
    for (int k = 0; k < 2 * j; ++k) p *= q;
    r *= 1 - 1 / p;
  }
  return r;
}

}  // namespace

TEST_CASE("T factor") {
  CHECK(T_factor(2) == frac(5, 2));
  CHECK(T_factor(3) == 10);
  CHECK(T_factor(4) == frac(51, 2));
  for (long q = 2; q <= 64; ++q) CHECK(T_factor(q) == T_from_group_orders(q));
  for (long q = 4; q <= 1000; ++q) REQUIRE(T_factor(q) > 25);
  CHECK(code_of([] { T_factor(1); }) == Errc::InvalidArgument);
}

TEST_CASE("eprime for special parahorics") {
  CHECK(eprime_special(3, 2) == 35);
  CHECK(eprime_special(2, 2) == 3);
  CHECK(eprime_special(2, 3) == 8);
  CHECK(eprime_special(4, 2) == Integer(3 * 63));
  CHECK(eprime_special(5, 2) == Integer(1 * 5 * 7 * 17 * 31));
  for (long q = 2; q <= 16; ++q) {
    for (int n = 2; n <= 8; ++n) {
      Integer e = eprime_special(n, q);
      REQUIRE(e >= 1);
      REQUIRE(e > 2);
      REQUIRE(h_rigidity_exact(q, n) <= Rational(e));
    }
  }
  CHECK(code_of([] { eprime_special(1, 2); }) == Errc::InvalidArgument);
}

TEST_CASE("rigidity bound h(q, n)") {
  CHECK(h_rigidity_exact(2, 3) == frac(2835, 768));
  CHECK(h_rigidity_exact(3, 2) == frac(160, 27));
  CHECK(h_rigidity_exact(2, 2) == frac(15, 8));
  CHECK(rigor::within("", h_rigidity(2, 3), frac(369, 100), frac(2, 100)).evaluate() == Truth::Holds);
  // The printed 17.75 for h(3,2) does not match the formula, which gives 5.93.
  CHECK(rigor::within("", h_rigidity(3, 2), frac(1775, 100), frac(2, 100)).evaluate() == Truth::Fails);
  for (long q = 2; q <= 16; ++q) {
    for (int n = 1; n <= 8; ++n) {
      Rational h = h_rigidity_exact(q, n);
      CHECK(std::abs(rigor::to_double(h) / h_double(q, n) - 1) < 1e-12);
      if (q < 16) REQUIRE(h < h_rigidity_exact(q + 1, n));
      if (n < 8) REQUIRE(h < h_rigidity_exact(q, n + 1));
    }
  }
}

TEST_CASE("non-special factors exceed two") {
  auto c22 = nonspecial_gt_two(2, 2);
  CHECK(c22.lhs == rigor::Interval(frac(5, 4)));
  CHECK(c22.evaluate() == Truth::Holds);
  CHECK(nonspecial_gt_two(2, 3).evaluate() == Truth::Holds);
  CHECK(nonspecial_gt_two(3, 2).evaluate() == Truth::Holds);
  for (long q = 2; q <= 16; ++q) {
    for (int n = 2; n <= 8; ++n) REQUIRE(nonspecial_gt_two(q, n).evaluate() == Truth::Holds);
  }
  // h(2,2) alone would not do, which is why (2,2) takes T(2).
  CHECK(h_rigidity_exact(2, 2) / kXiBound < 1);
}

TEST_CASE("local factor construction") {
  CHECK(make_factor(7, 3, Kind::Hyperspecial).value == rigor::Interval(1));
  CHECK(make_factor(2, 3, Kind::SpecialNonhyperspecial).value == rigor::Interval(35));
  CHECK(make_factor(4, 2, Kind::NonspecialRank2Levi).value == rigor::Interval(frac(51, 2)));
  CHECK(rank2_factor(3, 1).kind == Kind::Hyperspecial);
  CHECK(rank2_factor(3, 10).kind == Kind::NonspecialRank2Levi);
  CHECK(code_of([] { rank2_factor(3, 8); }) == Errc::InvariantViolation);
  CHECK(throws([] { make_factor(6, 2, Kind::Hyperspecial); }));
  CHECK(throws([] { make_factor(3, 3, Kind::NonspecialRank2Levi); }));
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L}) {
    for (int n = 2; n <= 8; ++n) {
      for (Kind k : {Kind::Hyperspecial, Kind::SpecialNonhyperspecial}) {
        auto f = make_factor(q, n, k);
        REQUIRE(f.value.lo() >= 1);
        REQUIRE((f.kind == Kind::Hyperspecial) == (f.value == rigor::Interval(1)));
      }
    }
  }
}

TEST_CASE("exclusion inequality") {
  CHECK(exclusion_inequality({}).evaluate() == Truth::Fails);
  CHECK(exclusion_inequality({make_factor(4, 2, Kind::NonspecialRank2Levi)}).evaluate() == Truth::Holds);
  CHECK(exclusion_inequality({make_factor(2, 2, Kind::NonspecialRank2Levi)}).evaluate() == Truth::Fails);
  CHECK(exclusion_inequality({make_factor(3, 2, Kind::NonspecialRank2Levi)}).evaluate() == Truth::Fails);
  // Hyperspecial factors change neither side.
  CHECK(exclusion_inequality({make_factor(4, 2, Kind::NonspecialRank2Levi), make_factor(5, 2, Kind::Hyperspecial)})
            .evaluate() == Truth::Holds);
  // Two places with q = 3: 100 > 20.
  auto two = exclusion_inequality({make_factor(3, 2, Kind::NonspecialRank2Levi),
                                   make_factor(3, 2, Kind::NonspecialRank2Levi)});
  CHECK(two.rhs == rigor::Interval(20));
  CHECK(two.evaluate() == Truth::Holds);
}

TEST_CASE("Q(sqrt 5) local exclusion") {
  auto catalog = numberfields::load_catalog_file(kData + "/fields.txt");
  auto x = qsqrt5_local_exclusion(numberfields::find_field(catalog, 2, 5));
  REQUIRE(x.places.size() == 2);
  CHECK(x.places[0].kind == numberfields::SplitKind::Inert);
  CHECK(x.places[0].places.at(0).q == 4);
  CHECK(x.places[1].kind == numberfields::SplitKind::Inert);
  CHECK(x.places[1].places.at(0).q == 9);
  CHECK(x.small_residue_fields_absent);
  CHECK(x.excluded_given_parity_axiom);
  CHECK_FALSE(numberfields::padic_square_test(5, 2));
  CHECK_FALSE(numberfields::padic_square_test(5, 3));
  CHECK(code_of([&] { qsqrt5_local_exclusion(numberfields::find_field(catalog, 2, 8)); }) == Errc::UnsupportedField);
}
