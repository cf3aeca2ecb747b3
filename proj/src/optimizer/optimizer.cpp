#include "covcert/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "covcert/error.hpp"
#include "covcert/specfun.hpp"

namespace covcert::optimizer {

namespace {

using rigor::frac;

// A grid point to evaluate; `t` is empty for the n = 3 search.
struct Task {
  OdlyzkoPair pair;
  std::optional<Rational> t;
};

// Infeasible: the feasibility condition certainly fails. Undecided: it is not
// certified either way at this precision.
struct Outcome {
  enum Kind { Value, Infeasible, Undecided } kind = Undecided;
  Interval value;
};

using Evaluator = std::function<Outcome(const Task&, long bits)>;

constexpr long kScreenBits = 64;

// Evaluates the selected tasks; slot i always holds task i so the outcome does
// not depend on scheduling.
void evaluate_into(std::vector<Outcome>& out, const std::vector<Task>& tasks, const std::vector<std::size_t>& which,
                   const Evaluator& eval, long bits, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, which.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t k = next++; k < which.size(); k = next++) {
      try {
        out[which[k]] = eval(tasks[which[k]], bits);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

// Lexicographic order on (A, E, t), used to break exact ties.
bool key_less(const Task& a, const Task& b) {
  if (a.pair.A != b.pair.A) return a.pair.A < b.pair.A;
  if (a.pair.E != b.pair.E) return a.pair.E < b.pair.E;
  return a.t.value_or(0) < b.t.value_or(0);
}

SearchResult search(const std::vector<Task>& tasks, const Evaluator& eval, const Options& options, long rows) {
  long bits = options.precision_bits;
  std::vector<std::size_t> all(tasks.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  // A cheap pass first. A point leaves the search only when it is certainly
  // infeasible or its screening enclosure lies above the best full-precision
  // value found so far.
  std::vector<Outcome> screen(tasks.size());
  bool screening = bits > kScreenBits;
  if (screening) evaluate_into(screen, tasks, all, eval, kScreenBits, options.threads);

  std::vector<Outcome> values(tasks.size());
  std::vector<bool> full(tasks.size(), false);
  auto pick_best = [&](const std::vector<std::size_t>& idx) {
    std::optional<std::size_t> best;
    for (std::size_t i : idx) {
      if (!full[i] || values[i].kind != Outcome::Value) continue;
      if (!best || values[i].value.hi() < values[*best].value.hi() ||
          (values[i].value.hi() == values[*best].value.hi() && key_less(tasks[i], tasks[*best]))) {
        best = i;
      }
    }
    return best;
  };

  std::vector<std::size_t> pending;
  if (screening) {
    std::optional<Rational> cut;
    for (std::size_t i : all) {
      if (screen[i].kind == Outcome::Value && (!cut || screen[i].value.hi() < *cut)) cut = screen[i].value.hi();
    }
    for (std::size_t i : all) {
      if (screen[i].kind == Outcome::Undecided || (screen[i].kind == Outcome::Value && screen[i].value.lo() <= *cut)) {
        pending.push_back(i);
      }
    }
  } else {
    pending = all;
  }
  std::optional<std::size_t> best;
  while (!pending.empty()) {
    evaluate_into(values, tasks, pending, eval, bits, options.threads);
    for (std::size_t i : pending) full[i] = true;
    pending.clear();
    best = pick_best(all);
    if (!best) break;
    for (std::size_t i : all) {
      if (!full[i] && screen[i].kind == Outcome::Value && screen[i].value.lo() <= values[*best].value.hi()) {
        pending.push_back(i);
      }
    }
  }
  long feasible = 0;
  for (std::size_t i : all) {
    bool ok = full[i] ? values[i].kind == Outcome::Value : screen[i].kind == Outcome::Value;
    feasible += ok ? 1 : 0;
  }
  if (!best) throw Error(Errc::NoFeasiblePoint, "no grid point satisfies the feasibility condition");

  auto contenders = [&](std::size_t b) {
    std::vector<std::size_t> out;
    for (std::size_t i : all) {
      if (i != b && full[i] && values[i].kind == Outcome::Value && values[i].value.lo() <= values[b].value.hi()) {
        out.push_back(i);
      }
    }
    return out;
  };
  auto close = contenders(*best);
  // Refine only the overlapping points, doubling precision up to 4x.
  for (long b = 2 * bits; !close.empty() && b <= 4 * options.precision_bits; b *= 2) {
    bits = b;
    std::vector<std::size_t> group = close;
    group.push_back(*best);
    std::sort(group.begin(), group.end());
    evaluate_into(values, tasks, group, eval, bits, options.threads);
    best = pick_best(group);
    if (!best) throw Error(Errc::NoFeasiblePoint, "feasibility lost under refinement");
    close.clear();
    for (std::size_t i : group) {
      if (i != *best && values[i].kind == Outcome::Value && values[i].value.lo() <= values[*best].value.hi()) {
        close.push_back(i);
      }
    }
  }

  SearchResult r;
  r.best_value = values[*best].value;
  r.best_pair = tasks[*best].pair;
  r.best_t = tasks[*best].t;
  r.rows_scanned = rows;
  r.points_scanned = static_cast<long>(tasks.size());
  r.feasible_points = feasible;
  r.precision_bits = bits;
  std::sort(close.begin(), close.end(), [&](std::size_t a, std::size_t b) { return key_less(tasks[a], tasks[b]); });
  for (std::size_t i : close) r.ties.push_back({tasks[i].pair, tasks[i].t, values[i].value});
  return r;
}

Interval n2_rhs_from_base(const OdlyzkoPair& pair, const Rational& t, const Interval& base, long w) {
  using namespace specfun;
  Interval log_x = Interval(pair.E * (t + 1) / 2 - 5 * pair.E) - log_enclosure(Interval(25 * t * (t + 1)), w);
  Interval log_psi = log_enclosure(Interval(bounds::Psi_exact(2)), w);
  return (log_psi - log_x) / log_enclosure(base, w);
}

}  // namespace

Interval n2_base(const OdlyzkoPair& pair, const Rational& t, long precision_bits) {
  using namespace specfun;
  long w = precision_bits + 16;
  Interval eta = Interval(3) * exp_enclosure(Interval(frac(23, 50)), w) /
                 (Interval(64) * rigor::pow(pi_enclosure(w), 6));
  Interval a_pow = pow_enclosure(Interval(pair.A), Interval(frac(9, 2) - t / 2), w);
  return (eta * a_pow * alpha_enclosure(Interval(t + 1), w)).coarsen(precision_bits);
}

Interval n2_rhs(const OdlyzkoPair& pair, const Rational& t, long precision_bits) {
  if (t <= 0) throw Error(Errc::NonPositiveT, "t must be positive");
  if (pair.A <= 1 || pair.E <= 0) throw Error(Errc::InvalidArgument, "Odlyzko pair needs A > 1 and E > 0");
  long w = precision_bits + 16;
  Interval base = n2_base(pair, t, w);
  if (!(base.lo() > 1)) {
    throw Error(Errc::InfeasibleBase, "base " + rigor::to_decimal(base, 8) + " is not certainly above 1");
  }
  return n2_rhs_from_base(pair, t, base, w).coarsen(precision_bits);
}

std::vector<Rational> listing_t_grid() {
  std::vector<Rational> grid;
  for (long k = 1; k < 250; ++k) grid.push_back(frac(k, 10));
  return grid;
}

SearchResult optimize_n2(const std::vector<OdlyzkoPair>& table, const std::vector<Rational>& t_grid,
                         const Options& options) {
  if (table.empty()) throw Error(Errc::EmptyTable, "odlyzko table is empty");
  std::vector<Task> tasks;
  for (const auto& p : table) {
    for (const auto& t : t_grid) tasks.push_back({p, t});
  }
  for (const auto& t : t_grid) {
    if (t <= 0) throw Error(Errc::NonPositiveT, "t must be positive");
  }
  Evaluator eval = [](const Task& task, long bits) {
    long w = bits + 16;
    Interval base = n2_base(task.pair, *task.t, w);
    if (base.hi() <= 1) return Outcome{Outcome::Infeasible, {}};
    if (!(base.lo() > 1)) return Outcome{Outcome::Undecided, {}};
    return Outcome{Outcome::Value, n2_rhs_from_base(task.pair, *task.t, base, w).coarsen(bits)};
  };
  return search(tasks, eval, options, static_cast<long>(table.size()));
}

SearchResult optimize_n3(const std::vector<OdlyzkoPair>& table, const Options& options) {
  if (table.empty()) throw Error(Errc::EmptyTable, "odlyzko table is empty");
  std::vector<Task> tasks;
  for (const auto& p : table) tasks.push_back({p, std::nullopt});
  Evaluator eval = [](const Task& task, long bits) {
    Interval den = Interval(frac(15, 2)) * specfun::log_enclosure(Interval(task.pair.A), bits + 16) -
                   Interval(frac(1299, 100));
    if (den.hi() <= 0) return Outcome{Outcome::Infeasible, {}};
    if (!den.is_positive()) return Outcome{Outcome::Undecided, {}};
    return Outcome{Outcome::Value, bounds::n3_degree_threshold(task.pair, bits)};
  };
  return search(tasks, eval, options, static_cast<long>(table.size()));
}

Lemma35Search find_lemma35_pair(const std::vector<OdlyzkoPair>& table, long precision_bits) {
  if (table.empty()) throw Error(Errc::EmptyTable, "odlyzko table is empty");
  Lemma35Search out;
  for (const auto& p : table) {
    out.verdicts.push_back(bounds::lemma35_conditions(p, precision_bits));
    if (out.verdicts.back().all_hold()) out.passing.push_back(p);
  }
  if (out.passing.empty()) throw Error(Errc::NoFeasiblePoint, "no row satisfies all three conditions");
  out.chosen = out.passing.front();
  return out;
}

}  // namespace covcert::optimizer
