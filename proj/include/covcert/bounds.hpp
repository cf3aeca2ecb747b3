#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "covcert/numberfields.hpp"
#include "covcert/rigor/comparison.hpp"

namespace covcert::bounds {

using numberfields::NumberFieldRecord;
using rigor::Integer;
using rigor::Interval;
using rigor::Rational;

/// D_K > A^d e^-E for every totally real field of degree d.
struct OdlyzkoPair {
  Rational A;
  Rational E;
  friend bool operator==(const OdlyzkoPair&, const OdlyzkoPair&) = default;
};
std::string to_string(const OdlyzkoPair& p);

/// CSV with header `A,E`; rows are exact decimals. EmptyTable when no rows.
std::vector<OdlyzkoPair> load_odlyzko(std::istream& source);
/// Verifies against SHA256SUMS in the same directory first.
std::vector<OdlyzkoPair> load_odlyzko_file(const std::string& path);

// ---------------------------------------------------------------- constants
//
// Decimal constants are kept as exact rationals.

Rational c_0915();      // 0.915
Rational c_1372_5();    // 1.83 * 750
Rational c_7_6();       // 7.6
Rational c_0_46();      // 0.46
Rational c_1_83();      // 1.83
Rational c_0_00019();   // 0.00019
Rational c_3_9();       // 3.9
Rational c_5_66();      // 5.66
Rational c_9_47();      // 9.47

/// n^2 + n/2 - 3
Rational f_of_n(int n);

struct PiValue {
  Rational coefficient;  // Pi(n) = coefficient * pi^pi_exponent
  long pi_exponent;
  Interval value;
};
/// Pi(n) = prod_{j<=n} (2j-1)! / (2 pi)^(2j), 1 <= n <= 64.
PiValue Pi_n(int n, long precision_bits = 256);

/// Pi(n+1) / Pi(n) = (2n+1)! / (2 pi)^(2n+2).
Interval Pi_ratio(int n, long precision_bits = 256);

/// Pi(n) prod_{j<=n} zeta(2j); the powers of pi cancel.
Rational Psi_exact(int n);
/// The same product from numerical zeta enclosures.
Interval Psi_interval(int n, long precision_bits = 256);

/// prod_{j<=J} zeta(2j) times the tail bound exp(2 * 4^-J / 3).
Interval zeta_product_partial(int J, bool with_tail, long precision_bits = 256);
/// 1.83, after checking zeta_product_partial(20, true) < 1.83.
Rational zeta_product_upper();

// ---------------------------------------------------------------- covolume

/// D^(n(2n+1)/2) Pi(n)^d prod_{j<=n} zeta_K(2j).
Interval S_lambda(const NumberFieldRecord& field, int n, long precision_bits = 256);
/// Exact value when it is rational (Q and real quadratic fields).
std::optional<Rational> S_lambda_exact(const NumberFieldRecord& field, int n);

/// Psi(n) / (S / 2^(2d-1)).
Interval quotient(const NumberFieldRecord& field, int n, long precision_bits = 256);
std::optional<Rational> quotient_exact(const NumberFieldRecord& field, int n);

/// quotient * index * h / 2^(2d-1). The covolume of a lattice over K is at
/// least Psi(n) / this value, so K is excluded when it is below 1.
Interval adjusted_quotient(const Interval& quotient, const NumberFieldRecord& field, long unit_index);

// ---------------------------------------------------------------- global bounds

/// (0.915 * 2^(2d) * h * Pi(n)^(1-d))^(1/(n^2+n/2))
Interval proto_D_bound(int n, int d, long h, long precision_bits = 256);

/// (1/750) D^f(n) (7.6 e^0.46 Pi(n))^d
Interval F_bound(int d, const Interval& D, int n, long precision_bits = 256);

/// F(d, A^d e^-E, n) = (1/750) e^(-E f(n)) (7.6 e^0.46 A^f(n) Pi(n))^d
Interval O_bound(int n, int d, const OdlyzkoPair& pair, long precision_bits = 256);

struct Lemma35Verdicts {
  rigor::Comparison a;  // 2 log A - E >= log 2pi + 1 - log 5
  rigor::Comparison b;  // A > 5.66
  rigor::Comparison c;  // -E + 2 log A > (log 9.47 - log Pi(4)) / f(4)
  rigor::Truth ta, tb, tc;
  bool all_hold() const {
    return ta == rigor::Truth::Holds && tb == rigor::Truth::Holds && tc == rigor::Truth::Holds;
  }
};
Lemma35Verdicts lemma35_conditions(const OdlyzkoPair& pair, long precision_bits = 256);

/// 7.6 e^0.46 A^f(n) Pi(n); condition (b) asks for >= 1 when n >= 3.
Interval lemma35_b_value(const Rational& A, int n, long precision_bits = 256);

/// log(Pi(n+1)^-1 O(n+1, 2) / (Pi(n)^-1 O(n, 2)))
///   = -E (2n + 3/2) + (4n+3) log A + log((2n+1)! / (2 pi)^(2n+2)).
Interval claim_a_log_ratio(int n, const OdlyzkoPair& pair, long precision_bits = 256);
/// The Stirling lower bound for the same quantity, used in the all-n argument.
Interval claim_a_stirling_lower(int n, const OdlyzkoPair& pair, long precision_bits = 256);

/// (7.5 E - 8.25) / (7.5 log A - 12.99). DenominatorNotPositive unless the
/// denominator is certainly positive.
Interval n3_degree_threshold(const OdlyzkoPair& pair, long precision_bits = 256);

/// (1372.5 Pi(3)^(1-d) (7.6 e^0.46)^-d)^(1/7.5)
Interval n3_D_bound(int d, long precision_bits = 256);

/// (11 * 0.00019^-d / 960)^(1/3.9)
Interval n2_D_bound(int d, long precision_bits = 256);

}  // namespace covcert::bounds
