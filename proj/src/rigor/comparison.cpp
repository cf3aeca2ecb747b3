#include "covcert/rigor/comparison.hpp"

#include "covcert/error.hpp"

namespace covcert::rigor {

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
    case Relation::Within: return "within";
  }
  return "?";
}

Relation parse_relation(std::string_view symbol) {
  for (Relation r : {Relation::Less, Relation::LessEq, Relation::Greater, Relation::GreaterEq, Relation::Within}) {
    if (relation_symbol(r) == symbol) return r;
  }
  throw Error(Errc::InvalidArgument, "unknown relation '" + std::string(symbol) + "'");
}

std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::Holds: return "holds";
    case Truth::Fails: return "fails";
    case Truth::Undecided: return "undecided";
  }
  return "undecided";
}

Truth Comparison::evaluate() const {
  const Interval& a = lhs;
  const Interval& b = rhs;
  switch (rel) {
    case Relation::Less:
      if (a.hi() < b.lo()) return Truth::Holds;
      if (a.lo() >= b.hi()) return Truth::Fails;
      return Truth::Undecided;
    case Relation::LessEq:
      if (a.hi() <= b.lo()) return Truth::Holds;
      if (a.lo() > b.hi()) return Truth::Fails;
      return Truth::Undecided;
    case Relation::Greater:
      if (a.lo() > b.hi()) return Truth::Holds;
      if (a.hi() <= b.lo()) return Truth::Fails;
      return Truth::Undecided;
    case Relation::GreaterEq:
      if (a.lo() >= b.hi()) return Truth::Holds;
      if (a.hi() < b.lo()) return Truth::Fails;
      return Truth::Undecided;
    case Relation::Within:
      if (b.contains(a)) return Truth::Holds;
      if (!overlaps(a, b)) return Truth::Fails;
      return Truth::Undecided;
  }
  return Truth::Undecided;
}

Comparison less(std::string label, Interval lhs, Interval rhs) {
  return {std::move(label), std::move(lhs), Relation::Less, std::move(rhs)};
}
Comparison greater(std::string label, Interval lhs, Interval rhs) {
  return {std::move(label), std::move(lhs), Relation::Greater, std::move(rhs)};
}
Comparison less_eq(std::string label, Interval lhs, Interval rhs) {
  return {std::move(label), std::move(lhs), Relation::LessEq, std::move(rhs)};
}
Comparison greater_eq(std::string label, Interval lhs, Interval rhs) {
  return {std::move(label), std::move(lhs), Relation::GreaterEq, std::move(rhs)};
}

Comparison within(std::string label, Interval lhs, const Rational& target, const Rational& tol) {
  return {std::move(label), std::move(lhs), Relation::Within, Interval(target - tol, target + tol)};
}

Comparison within_relative(std::string label, Interval lhs, const Rational& target, const Rational& rel) {
  Rational a = target * (1 - rel);
  Rational b = target * (1 + rel);
  return {std::move(label), std::move(lhs), Relation::Within, Interval(a < b ? a : b, a < b ? b : a)};
}

}  // namespace covcert::rigor
