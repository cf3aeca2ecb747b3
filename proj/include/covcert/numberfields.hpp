#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "covcert/rigor/interval.hpp"

namespace covcert::numberfields {

using rigor::Integer;
using rigor::Interval;
using rigor::Rational;

/// Coefficients, lowest degree first. Trailing zeros are not stored.
using Poly = std::vector<Rational>;

// ---------------------------------------------------------------- polynomials

int degree(const Poly& f);  // -1 for the zero polynomial
Poly trim(Poly f);
Poly derivative(const Poly& f);
Rational evaluate(const Poly& f, const Rational& x);
Interval evaluate(const Poly& f, const Interval& x);
/// Remainder of f modulo g.
Poly poly_mod(const Poly& f, const Poly& g);

/// Resultant via the Sylvester determinant; for monic f this is the product
/// of g over the roots of f.
Rational resultant(const Poly& f, const Poly& g);
Rational discriminant(const Poly& f);

/// Number of distinct real roots (Sturm).
int count_real_roots(const Poly& f);
/// Disjoint enclosures of the real roots of a squarefree f, ascending, each of
/// width at most 2^-bits (a point when the root is rational and hit exactly).
std::vector<Interval> real_roots(const Poly& f, long bits);

struct ModFactor {
  int degree;
  int multiplicity;
};
/// Irreducible factorization pattern of an integral monic f over F_p.
std::vector<ModFactor> factor_mod_p(const Poly& f, long p);

// ---------------------------------------------------------------- catalog

struct NumberFieldRecord {
  std::string label;
  int degree = 1;
  long discriminant = 1;
  long class_number = 1;
  Poly polynomial;  // monic, integral
  bool is_totally_real = false;
  /// [O_K : Z[theta]], from disc(f) = D * index^2.
  Integer polynomial_index{1};
  /// Optional units beyond -1 as polynomials in theta.
  std::vector<Poly> units;
};

/// Line format `label|d|D|h|c0,c1,...[|u;u;...]`, `#` starts a comment.
/// Units are comma-separated rational coefficient lists. Records come back
/// sorted by (d, D).
std::vector<NumberFieldRecord> load_catalog(std::istream& source);
/// Verifies the file against SHA256SUMS in the same directory first.
std::vector<NumberFieldRecord> load_catalog_file(const std::string& path);

/// Lines `complete|d|L` state that every totally real field of degree d with
/// D < L is listed. Returns d -> L.
std::map<int, long> load_completeness(std::istream& source);
std::map<int, long> load_completeness_file(const std::string& path);

/// Fields of degree d whose discriminant is below the bound. The comparison
/// uses bound.hi, so an uncertain field is kept rather than dropped.
std::vector<NumberFieldRecord> select(const std::vector<NumberFieldRecord>& catalog, int d,
                                      const Interval& bound);
const NumberFieldRecord& find_field(const std::vector<NumberFieldRecord>& catalog, const std::string& label);
const NumberFieldRecord& find_field(const std::vector<NumberFieldRecord>& catalog, int d, long D);

// ---------------------------------------------------------------- units

/// Minimal (a, b), ascending in b, with a^2 - D b^2 = +-4.
std::pair<Integer, Integer> pell_fundamental_unit(long D);

/// Signs (+1 / -1) of x at every real embedding, certified by root isolation.
std::vector<int> embedding_signs(const NumberFieldRecord& field, const Poly& x);

/// Generators used for sign counting: -1, then the Pell unit (quadratic) or
/// the catalog units.
std::vector<Poly> unit_generators(const NumberFieldRecord& field);

/// Number of totally positive classes among the products of subsets of the
/// generators.
long count_totally_positive_classes(const NumberFieldRecord& field);

/// [U+ : U^2]. Needs a full system of fundamental units: Q, any quadratic
/// field, or a field whose catalog units number d - 1. Otherwise
/// UnsupportedField.
long totally_positive_index(const NumberFieldRecord& field);

/// Upper bound 2^(d - r) where r is the rank of the sign vectors of the known
/// units; valid for every field.
long totally_positive_index_upper(const NumberFieldRecord& field);

// ---------------------------------------------------------------- analytic

/// 0.04 e^(0.46 d), the regulator lower bound.
Interval zimmert_lower(int d, long precision_bits = 256);

/// 2t(t+1) (Gamma((t+1)/2) / (2 pi^((1+t)/2)))^d D^((t+1)/2) zeta(t+1)^d.
Interval brauer_siegel_H(int d, const Interval& D, const Rational& t, long precision_bits = 256);

/// zeta_K(2j) = c * pi^(2j) for Q and c * sqrt(D) * pi^(4j) for real
/// quadratic fields. UnsupportedField otherwise.
Rational dedekind_zeta_even_coefficient(const NumberFieldRecord& field, unsigned j);

/// zeta_K(s) for even s >= 2. Q and quadratic fields use the closed forms;
/// fields with polynomial index 1 use an Euler product over p <= 10^5.
Interval dedekind_zeta_enclosure(const NumberFieldRecord& field, int s, long precision_bits = 256);

/// The Euler-product route on its own, for cross-checks.
Interval dedekind_zeta_euler(const NumberFieldRecord& field, int s, long prime_bound, long precision_bits = 256);

// ---------------------------------------------------------------- local

enum class SplitKind { Split, Inert, Ramified, Partial };
std::string to_string(SplitKind k);

struct Place {
  int e;       // ramification index
  int f;       // residue degree
  Integer q;   // residue cardinality p^f
};

struct SplittingType {
  long p;
  SplitKind kind;
  std::vector<Place> places;
};

SplittingType splitting_type(const NumberFieldRecord& field, long p);

/// x is a square in Q_p (x != 0).
bool padic_square_test(const Integer& x, long p);

bool is_prime(long n);

}  // namespace covcert::numberfields
