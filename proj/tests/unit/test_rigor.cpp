#include <doctest.h>

#include <random>

#include "covcert/error.hpp"
#include "covcert/rigor/comparison.hpp"
#include "covcert/rigor/interval.hpp"

using namespace covcert;
using namespace covcert::rigor;

namespace {

Rational q(long a, long b = 1) { return canonical(Rational(a, b)); }

struct Rng {
  std::mt19937_64 gen{20240611};
  Rational rational() {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    return canonical(Rational(num(gen), den(gen)));
  }
  Interval interval() {
    Rational a = rational();
    Rational b = rational();
    return a < b ? Interval(a, b) : Interval(b, a);
  }
  // A point of x chosen with rational weights.
  Rational inside(const Interval& x) {
    std::uniform_int_distribution<long> t(0, 64);
    Rational lam = frac(t(gen), 64);
    return x.lo() + lam * x.width();
  }
  // A superset of x.
  Interval enlarge(const Interval& x) {
    std::uniform_int_distribution<long> t(0, 50);
    return Interval(x.lo() - frac(t(gen), 7), x.hi() + frac(t(gen), 11));
  }
};

Rational apply(ArithOp op, const Rational& x, const Rational& y) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
    case ArithOp::Neg: return -x;
    case ArithOp::Abs: return x < 0 ? Rational(-x) : x;
  }
  return 0;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-3/2") == q(-3, 2));
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("6.894") == q(6894, 1000));
  CHECK(parse_rational("1e-5") == q(1, 100000));
  CHECK(parse_rational("2.5E3") == q(2500));
  CHECK(parse_rational("+0.0001") == q(1, 10000));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(to_string(q(1, 5760)) == "1/5760");
  CHECK(to_string(q(-4)) == "-4");
  CHECK(to_decimal(q(1, 5760), 4) == "0.0001736");
  CHECK(to_decimal(q(10), 12) == "10");
  CHECK(to_decimal(q(-1, 3), 5) == "-0.33333");
  CHECK(to_decimal(q(1, 3000000), 3) == "3.33e-07");
  CHECK(to_decimal(q(999999, 1000), 3) == "1e+03");
}

TEST_CASE("canonical form is idempotent") {
  Rng rng;
  for (int i = 0; i < 200; ++i) {
    Rational r = rng.rational();
    Rational c = canonical(r);
    CHECK(c == canonical(c));
    CHECK(c.get_den() > 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    CHECK((c == 0 || g == 1));
  }
}

TEST_CASE("dyadic rounding brackets the input") {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    Rational r = rng.rational() / 7;
    for (long bits : {8L, 20L, 64L}) {
      CHECK(round_down(r, bits) <= r);
      CHECK(round_up(r, bits) >= r);
      if (r != 0) {
        Rational spread = (round_up(r, bits) - round_down(r, bits)) / abs(r);
        CHECK(spread <= Rational(1, 1L << (bits - 3)));
      }
    }
  }
  CHECK(round_down(q(5), 8) == q(5));
}

TEST_CASE("iv_exact") {
  CHECK(exact(q(1, 5760)) == Interval(q(1, 5760), q(1, 5760)));
  CHECK(exact(q(0)).is_point());
  CHECK(exact(q(-3, 2)).lo() == q(-3, 2));
  CHECK_THROWS_AS(Interval(q(2), q(1)), Error);
}

TEST_CASE("iv_arith examples") {
  CHECK(Interval(1, 2) + Interval(3, 4) == Interval(4, 6));
  CHECK(Interval(-1, 2) * Interval(3, 4) == Interval(-4, 8));
  CHECK(pow(Interval(2), 5) == Interval(32));
  CHECK(pow(Interval(-2, 1), 2) == Interval(0, 4));
  CHECK(pow(Interval(2, 4), -1) == Interval(q(1, 4), q(1, 2)));
  CHECK(abs(Interval(-3, 1)) == Interval(0, 3));
  CHECK(-Interval(1, 2) == Interval(-2, -1));
  CHECK(Interval(1, 2) / Interval(4, 8) == Interval(q(1, 8), q(1, 2)));
  CHECK_THROWS_AS(Interval(1) / Interval(-1, 1), Error);
  CHECK_THROWS_AS(pow(Interval(-1, 1), -2), Error);
  try {
    (void)(Interval(1) / Interval(0, 1));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByIntervalContainingZero);
  }
}

TEST_CASE("iv_compare") {
  CHECK(compare(Interval(1, 2), Interval(3, 4)) == Ordering::CertainlyLess);
  CHECK(compare(Interval(1, 3), Interval(2, 4)) == Ordering::Overlap);
  CHECK(compare(Interval(5, 6), Interval(1, 2)) == Ordering::CertainlyGreater);
  CHECK(compare(Interval(1, 2), Interval(2, 3)) == Ordering::Overlap);
}

TEST_CASE("comparisons decide only on disjoint enclosures") {
  CHECK(less("a", Interval(1, 2), Interval(3)).evaluate() == Truth::Holds);
  CHECK(less("a", Interval(1, 3), Interval(3)).evaluate() == Truth::Undecided);
  CHECK(less("a", Interval(3, 4), Interval(3)).evaluate() == Truth::Fails);
  CHECK(less_eq("a", Interval(1, 3), Interval(3)).evaluate() == Truth::Holds);
  CHECK(greater("a", Interval(4), Interval(1, 2)).evaluate() == Truth::Holds);
  CHECK(greater_eq("a", Interval(2, 5), Interval(1, 2)).evaluate() == Truth::Holds);
  CHECK(within("a", Interval(q(527, 100)), q(527, 100), q(1, 100)).evaluate() == Truth::Holds);
  CHECK(within("a", Interval(6), q(527, 100), q(1, 100)).evaluate() == Truth::Fails);
  CHECK(within("a", Interval(5, 6), q(527, 100), q(1, 100)).evaluate() == Truth::Undecided);
  CHECK(within_relative("a", Interval(q(-101, 100)), q(-1), q(1, 50)).evaluate() == Truth::Holds);
  CHECK(parse_relation(relation_symbol(Relation::GreaterEq)) == Relation::GreaterEq);
}

TEST_CASE("containment soundness and inclusion monotonicity, randomized") {
  Rng rng;
  const ArithOp ops[] = {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div, ArithOp::Neg, ArithOp::Abs};
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    ArithOp op = ops[i % 6];
    Interval a = rng.interval();
    Interval b = rng.interval();
    if (op == ArithOp::Div && b.contains_zero()) {
      b = b.lo() > -1 ? Interval(b.hi() + 1, b.hi() + 2) : Interval(b.lo() - 2, b.lo() - 1);
      if (b.contains_zero()) b = Interval(1, 2);
    }
    Interval r = arith(op, a, b);
    Rational x = rng.inside(a);
    Rational y = rng.inside(b);
    REQUIRE(r.contains(apply(op, x, y)));

    Interval a2 = rng.enlarge(a);
    Interval b2 = op == ArithOp::Div ? b : rng.enlarge(b);
    REQUIRE(arith(op, a2, b2).contains(r));

    long e = static_cast<long>(i % 7) - 3;
    if (e < 0 && a2.contains_zero()) continue;
    REQUIRE(pow(a2, e).contains(pow(a, e)));
    REQUIRE(pow(a, e).contains(pow(x, e)));
    ++checked;
  }
  CHECK(checked > 5000);
}

TEST_CASE("coarsening is outward and nested") {
  Interval x(q(1, 3), q(2, 3));
  for (long bits : {16L, 32L, 64L}) {
    Interval c = x.coarsen(bits);
    CHECK(c.contains(x));
    CHECK(x.coarsen(bits - 8).contains(c));
  }
}

TEST_CASE("hull and intersect") {
  CHECK(hull(Interval(1, 2), Interval(4, 5)) == Interval(1, 5));
  CHECK(intersect(Interval(1, 3), Interval(2, 5)) == Interval(2, 3));
  CHECK_THROWS_AS(intersect(Interval(1, 2), Interval(3, 4)), Error);
}
