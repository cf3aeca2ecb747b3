#pragma once

#include <string>
#include <string_view>

#include "covcert/rigor/interval.hpp"

namespace covcert::rigor {

enum class Relation { Less, LessEq, Greater, GreaterEq, Within };

enum class Truth { Holds, Fails, Undecided };

std::string_view relation_symbol(Relation r);
Relation parse_relation(std::string_view symbol);
std::string_view truth_name(Truth t);

/// One recorded inequality between two enclosures. `Within` means lhs is a
/// subset of rhs (used for "matches a printed value up to a tolerance").
struct Comparison {
  std::string label;
  Interval lhs;
  Relation rel = Relation::Less;
  Interval rhs;

  /// Holds or Fails only when the enclosures decide the relation for every
  /// pair of points they contain; Undecided otherwise.
  Truth evaluate() const;
};

Comparison less(std::string label, Interval lhs, Interval rhs);
Comparison greater(std::string label, Interval lhs, Interval rhs);
Comparison less_eq(std::string label, Interval lhs, Interval rhs);
Comparison greater_eq(std::string label, Interval lhs, Interval rhs);
/// lhs within [target - tol, target + tol].
Comparison within(std::string label, Interval lhs, const Rational& target, const Rational& tol);
/// lhs within target * [1 - rel, 1 + rel].
Comparison within_relative(std::string label, Interval lhs, const Rational& target, const Rational& rel);

}  // namespace covcert::rigor
