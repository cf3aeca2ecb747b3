#pragma once

#include <optional>
#include <vector>

#include "covcert/bounds.hpp"

namespace covcert::optimizer {

using bounds::OdlyzkoPair;
using rigor::Interval;
using rigor::Rational;

struct GridPoint {
  OdlyzkoPair pair;
  std::optional<Rational> t;
  Interval value;
};

struct SearchResult {
  Interval best_value;
  OdlyzkoPair best_pair;
  std::optional<Rational> best_t;
  long rows_scanned = 0;
  long points_scanned = 0;
  long feasible_points = 0;
  /// Points whose enclosure still overlaps the best one at the highest
  /// precision tried. Empty when the minimum is certified.
  std::vector<GridPoint> ties;
  long precision_bits = 0;
  bool is_tie() const { return !ties.empty(); }
};

struct Options {
  long precision_bits = 256;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// eta * A^(4.5 - t/2) * alpha(t+1) with eta = 3 e^0.46 / (64 pi^6).
Interval n2_base(const OdlyzkoPair& pair, const Rational& t, long precision_bits = 256);

/// (log Psi(2) - logX) / log(base), logX = E(t+1)/2 - 5E - log(25 t (t+1)).
/// Degrees above the result are excluded for n = 2. NonPositiveT for t <= 0,
/// InfeasibleBase unless base > 1 is certified.
Interval n2_rhs(const OdlyzkoPair& pair, const Rational& t, long precision_bits = 256);

/// t = k/10 for k = 1..249.
std::vector<Rational> listing_t_grid();

SearchResult optimize_n2(const std::vector<OdlyzkoPair>& table, const std::vector<Rational>& t_grid,
                         const Options& options = {});
inline SearchResult optimize_n2(const std::vector<OdlyzkoPair>& table, const Options& options = {}) {
  return optimize_n2(table, listing_t_grid(), options);
}

/// Minimizes the n = 3 degree threshold over the rows where it is defined.
SearchResult optimize_n3(const std::vector<OdlyzkoPair>& table, const Options& options = {});

struct Lemma35Search {
  OdlyzkoPair chosen;
  std::vector<OdlyzkoPair> passing;
  std::vector<bounds::Lemma35Verdicts> verdicts;  // one per row, table order
};
/// First row passing all three conditions. NoFeasiblePoint if none does.
Lemma35Search find_lemma35_pair(const std::vector<OdlyzkoPair>& table, long precision_bits = 256);

}  // namespace covcert::optimizer
