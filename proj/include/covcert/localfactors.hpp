#pragma once

#include <string>
#include <vector>

#include "covcert/numberfields.hpp"
#include "covcert/rigor/comparison.hpp"

namespace covcert::localfactors {

using rigor::Integer;
using rigor::Interval;
using rigor::Rational;

enum class Kind { Hyperspecial, SpecialNonhyperspecial, NonspecialRank2Levi };
std::string to_string(Kind k);

/// (q^4 - 1) / (2 (q + 1)), the only non-trivial e' in rank 2.
Rational T_factor(const Integer& q);

/// e' of a special, non-hyperspecial parahoric over Q:
///   prod_{j<=n} (q^j + (-1)^j)          for odd n,
///   prod_{j<=m} (q^(4j-2) - 1)          for n = 2m.
Integer eprime_special(int n, const Integer& q);

/// h(q, n) = q^(n+1) / (q + 1) prod_{j<=n} (1 - q^(-2j)).
Rational h_rigidity_exact(const Integer& q, int n);
Interval h_rigidity(const Integer& q, int n);

/// Size of the diagram automorphism group fixing a type. Only {1, 2} occurs;
/// the maximum is used throughout so every verdict stays conservative.
inline constexpr long kXiBound = 2;

/// Lower bound for e' at a non-special parahoric, divided by #Xi, compared
/// against 1. Uses T(2) at (q, n) = (2, 2) and h(q, n) elsewhere.
rigor::Comparison nonspecial_gt_two(const Integer& q, int n);

struct LocalFactor {
  Integer q;
  int n;
  Kind kind;
  Interval value;
};

/// Builds the factor from its kind. Rank 2 non-special factors take T(q);
/// q must be a prime power.
LocalFactor make_factor(const Integer& q, int n, Kind kind);
/// Rank 2 with an explicit value, which must be 1 or T(q).
LocalFactor rank2_factor(const Integer& q, const Rational& value);

/// prod e' > 5 * 2^#T, where T is the set of non-hyperspecial factors.
rigor::Comparison exclusion_inequality(const std::vector<LocalFactor>& factors);

/// Local argument for Q(sqrt 5) at rank 2: no place has residue cardinality
/// 2 or 3, and T(q) / 2 > 5 for q >= 4. What is left is the parity of the
/// ramification of the quaternion algebra at infinity (axiom A1).
struct LocalExclusion {
  std::vector<numberfields::SplittingType> places;  // above 2 and 3
  std::vector<rigor::Comparison> checks;
  bool small_residue_fields_absent = false;
  bool excluded_given_parity_axiom = false;
};
LocalExclusion qsqrt5_local_exclusion(const numberfields::NumberFieldRecord& field);

}  // namespace covcert::localfactors
