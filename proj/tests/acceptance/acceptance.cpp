// Acceptance checks, one per criterion. Prints a PASS or FAIL line per
// criterion and the individual checks behind it.
//
//   acceptance --criterion N     run one criterion
//   acceptance                   run all of them

#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "covcert/bounds.hpp"
#include "covcert/certifier.hpp"
#include "covcert/error.hpp"
#include "covcert/localfactors.hpp"
#include "covcert/numberfields.hpp"
#include "covcert/optimizer.hpp"
#include "covcert/specfun.hpp"
#include "oracles/oracles.hpp"

using namespace covcert;
using rigor::frac;
using rigor::Interval;
using rigor::Rational;

namespace {

const std::string kData = COVCERT_TEST_DATA_DIR;

struct Check {
  std::string what;
  bool ok;
};
using Checks = std::vector<Check>;

Rational dec(const char* s) { return rigor::parse_rational(s); }

std::string show(const Interval& x) { return rigor::to_decimal(x, 12); }

bool within(const Interval& x, const char* target, const char* tol) {
  Rational t = dec(target);
  Rational e = dec(tol);
  return Interval(t - e, t + e).contains(x);
}

bool within_rel(const Interval& x, const char* target, const char* rel) {
  Rational t = dec(target);
  Rational e = t * dec(rel);
  return Interval(t - e, t + e).contains(x);
}

const std::vector<numberfields::NumberFieldRecord>& catalog() {
  static const auto c = numberfields::load_catalog_file(kData + "/fields.txt");
  return c;
}

const std::vector<bounds::OdlyzkoPair>& table() {
  static const auto t = bounds::load_odlyzko_file(kData + "/odlyzko.csv");
  return t;
}

bounds::OdlyzkoPair pair(const char* A, const char* E) { return {dec(A), dec(E)}; }

certifier::Config config(unsigned threads) {
  certifier::Config c;
  c.fields_path = kData + "/fields.txt";
  c.odlyzko_path = kData + "/odlyzko.csv";
  c.threads = threads;
  return c;
}

Checks criterion_1() {
  Checks out;
  out.push_back({"Psi(2) = " + rigor::to_string(bounds::Psi_exact(2)), bounds::Psi_exact(2) == frac(1, 5760)});
  out.push_back(
      {"Psi(3) = " + rigor::to_string(bounds::Psi_exact(3)), bounds::Psi_exact(3) == frac(1, 2903040)});
  return out;
}

Checks criterion_2() {
  Interval a = specfun::alpha_enclosure(Interval(frac(599, 100)));
  Interval mpfr = oracles::mpfr_alpha(frac(599, 100));
  // The printed value has four decimals, so it is read as a window of width
  // 10^-3 around the enclosure.
  Rational half = frac(1, 2000);
  Interval window(a.midpoint() - half, a.midpoint() + half);
  return {
      {"alpha(5.99) = " + show(a), true},
      {"width < 1e-3", a.width() < frac(1, 1000)},
      {"15.2199 within the 1e-3 window", window.contains(dec("15.2199"))},
      {"agrees with MPFR " + show(mpfr), rigor::overlaps(a, mpfr)},
  };
}

Checks criterion_3() {
  auto good = bounds::lemma35_conditions(pair("6.894", "2.2667"));
  auto bad = bounds::lemma35_conditions(pair("5.0", "2.2667"));
  using rigor::Truth;
  return {
      {"(6.894, 2.2667) condition (a) holds", good.ta == Truth::Holds},
      {"(6.894, 2.2667) condition (b) holds", good.tb == Truth::Holds},
      {"(6.894, 2.2667) condition (c) holds", good.tc == Truth::Holds},
      {"(5.0, 2.2667) condition (b) fails", bad.tb == Truth::Fails},
  };
}

Checks criterion_4() {
  auto r = optimizer::optimize_n3(table());
  Interval oracle = oracles::mpfr_n3_threshold(dec("13.047"), dec("3.8667"));
  return {
      {"minimum " + show(r.best_value) + " at " + bounds::to_string(r.best_pair), true},
      {"within 3.31 +- 0.02", within(r.best_value, "3.31", "0.02")},
      {"argmin (13.047, 3.8667)", r.best_pair == pair("13.047", "3.8667")},
      {"certified unique minimum", !r.is_tie()},
      {"agrees with MPFR " + show(oracle), rigor::overlaps(r.best_value, oracle)},
  };
}

Checks criterion_5() {
  auto r = optimizer::optimize_n2(table());
  Interval oracle = oracles::mpfr_n2_rhs(dec("21.512"), dec("6.0001"), dec("1.2"));
  bool at = r.best_pair == pair("21.512", "6.0001") && r.best_t && *r.best_t == dec("1.2");
  return {
      {"threshold " + show(r.best_value) + " at " + bounds::to_string(r.best_pair) +
           (r.best_t ? ", t = " + rigor::to_decimal(*r.best_t, 4) : ""),
       true},
      {"within 5.5535611217287 +- 1e-6", within(r.best_value, "5.5535611217287", "0.000001")},
      {"argmin (21.512, 6.0001, 1.2)", at},
      {"certified unique minimum", !r.is_tie()},
      {"threshold < 6, so d_K >= 6 is excluded", r.best_value.hi() < 6},
      {"agrees with MPFR " + show(oracle), rigor::overlaps(r.best_value, oracle)},
  };
}

Checks criterion_6() {
  Checks out;
  const std::pair<int, const char*> n3[] = {{2, "10.63"}, {3, "60.09"}};
  for (auto [d, target] : n3) {
    Interval b = bounds::n3_D_bound(d);
    bool agree = rigor::overlaps(b, oracles::mpfr_n3_D_bound(d));
    out.push_back({"n=3, d=" + std::to_string(d) + ": " + show(b) + " vs " + target + " +- 0.02",
                   agree && within(b, target, "0.02")});
  }
  const std::pair<int, const char*> n2[] = {{2, "25.74"}, {3, "231.65"}, {4, "2084.50"}, {5, "18757.18"}};
  for (auto [d, target] : n2) {
    Interval b = bounds::n2_D_bound(d);
    bool agree = rigor::overlaps(b, oracles::mpfr_n2_D_bound(d));
    out.push_back({"n=2, d=" + std::to_string(d) + ": " + show(b) + " vs " + target + " +- 0.02",
                   agree && within(b, target, "0.02")});
  }
  struct Proto {
    int n, d;
    const char* target;
  };
  const Proto protos[] = {{3, 2, "5.27"}, {3, 3, "28.087"}, {2, 5, "3177"}, {2, 4, "436"}, {2, 3, "59"}, {2, 2, "8"}};
  for (const auto& p : protos) {
    Interval b = bounds::proto_D_bound(p.n, p.d, 1);
    bool agree = rigor::overlaps(b, oracles::mpfr_proto_bound(p.n, p.d, 1));
    out.push_back({"proto bound n=" + std::to_string(p.n) + ", d=" + std::to_string(p.d) + ", h=1: " + show(b) +
                       " vs " + p.target + " +- 0.5%",
                   agree && within_rel(b, p.target, "0.005")});
  }
  return out;
}

Checks criterion_7() {
  const auto& c = catalog();
  struct Case {
    int d;
    long D;
    int n;
    const char* target;
    bool survives;
  };
  const Case cases[] = {{3, 49, 2, "19.85", false}, {2, 5, 2, "40", true}, {2, 8, 2, "2.91", false},
                        {2, 5, 3, "2.99", false}};
  Checks out;
  for (const auto& k : cases) {
    const auto& f = numberfields::find_field(c, k.d, k.D);
    Interval q = bounds::quotient(f, k.n);
    long index = numberfields::totally_positive_index(f);
    Interval adj = bounds::adjusted_quotient(q, f, index);
    std::string tag = "d=" + std::to_string(k.d) + ", D=" + std::to_string(k.D) + ", n=" + std::to_string(k.n);
    out.push_back({tag + ": quotient " + show(q) + " vs " + k.target + " +- 0.5%", within_rel(q, k.target, "0.005")});
    bool verdict = k.survives ? adj.lo() >= 1 : adj.hi() < 1;
    out.push_back({tag + ": adjusted " + show(adj) + (k.survives ? " survives" : " excluded"), verdict});
  }
  auto c2 = certifier::run_case(2, config(0));
  auto c3 = certifier::run_case(3, config(0));
  out.push_back({"n=2 global survivors: Q(sqrt5) and the trivial field",
                 c2.surviving_fields_after_global == std::vector<std::string>{"2.2.5.1", "1.1.1.1"}});
  out.push_back({"n=3 global survivors: the trivial field only",
                 c3.surviving_fields_after_global == std::vector<std::string>{"1.1.1.1"}});
  return out;
}

Checks criterion_8() {
  const auto& c = catalog();
  Checks out;
  for (auto [d, D] : {std::pair{2, 5L}, std::pair{2, 8L}, std::pair{3, 49L}}) {
    long index = numberfields::totally_positive_index(numberfields::find_field(c, d, D));
    out.push_back({"[U+ : U^2] = " + std::to_string(index) + " for d=" + std::to_string(d) + ", D=" +
                       std::to_string(D),
                   index == 1});
  }
  int agree = 0;
  int total = 0;
  for (const auto& f : c) {
    if (f.degree != 2) continue;
    ++total;
    auto [a, b] = oracles::pell_bruteforce(f.discriminant);
    long expected = a * a - f.discriminant * b * b == 4 ? 2 : 1;
    if (numberfields::totally_positive_index(f) == expected) ++agree;
  }
  out.push_back({"brute-force agreement on " + std::to_string(agree) + " of " + std::to_string(total) +
                     " quadratic fields",
                 total > 0 && agree == total});
  return out;
}

Checks criterion_9() {
  using localfactors::eprime_special;
  using localfactors::h_rigidity;
  using localfactors::T_factor;
  Checks out;
  out.push_back({"T(2) = " + rigor::to_string(T_factor(2)), T_factor(2) == frac(5, 2)});
  out.push_back({"T(3) = " + rigor::to_string(T_factor(3)), T_factor(3) == 10});
  out.push_back({"eprime_special(3, 2) = " + eprime_special(3, 2).get_str(), eprime_special(3, 2) == 35});
  out.push_back({"eprime_special(2, 2) = " + eprime_special(2, 2).get_str(), eprime_special(2, 2) == 3});
  Interval h23 = h_rigidity(2, 3);
  Interval h32 = h_rigidity(3, 2);
  out.push_back({"h(2,3) = " + show(h23) + " vs 3.69 +- 0.02", within(h23, "3.69", "0.02")});
  out.push_back({"h(3,2) = " + show(h32) + " vs 17.75 +- 0.02", within(h32, "17.75", "0.02")});
  int holds = 0;
  int total = 0;
  for (long q = 2; q <= 16; ++q) {
    if (!numberfields::is_prime(q)) {
      bool power = false;
      for (long p = 2; p < q; ++p) {
        if (!numberfields::is_prime(p)) continue;
        long m = q;
        while (m % p == 0) m /= p;
        power = power || m == 1;
      }
      if (!power) continue;
    }
    for (int n = 2; n <= 8; ++n) {
      ++total;
      if (localfactors::nonspecial_gt_two(q, n).evaluate() == rigor::Truth::Holds) ++holds;
    }
  }
  out.push_back({"nonspecial_gt_two holds at " + std::to_string(holds) + " of " + std::to_string(total) +
                     " (q, n) with q <= 16, n <= 8",
                 holds == total});
  return out;
}

Checks criterion_10() {
  Checks out;
  for (int n = 2; n <= 8; ++n) {
    auto cert = certifier::run_case(n, config(1));
    bool steps_ok = true;
    for (const auto& s : cert.steps) {
      if (s.verdict != certifier::Verdict::Axiom && s.verdict != certifier::Verdict::Proved) steps_ok = false;
    }
    out.push_back({"n=" + std::to_string(n) + ": " + cert.final_conclusion,
                   steps_ok && cert.final_conclusion == certifier::kConclusion});
    if (n <= 3) {
      std::string first = certifier::emit_report(cert, certifier::Format::Json);
      std::string again = certifier::emit_report(certifier::run_case(n, config(1)), certifier::Format::Json);
      std::string threaded = certifier::emit_report(certifier::run_case(n, config(4)), certifier::Format::Json);
      out.push_back({"n=" + std::to_string(n) + ": report identical across runs and thread counts",
                     first == again && first == threaded});
      out.push_back({"n=" + std::to_string(n) + ": report re-verifies",
                     certifier::verify_report_text(first).verdict == certifier::Verdict::Proved});
    }
  }
  return out;
}

Checks criterion_11() {
  Checks out;

  std::mt19937_64 gen(7);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 64);
  auto interval = [&] {
    Rational a = frac(num(gen), den(gen));
    Rational b = frac(num(gen), den(gen));
    return a < b ? Interval(a, b) : Interval(b, a);
  };
  const rigor::ArithOp ops[] = {rigor::ArithOp::Add, rigor::ArithOp::Sub, rigor::ArithOp::Mul,
                                rigor::ArithOp::Div, rigor::ArithOp::Neg, rigor::ArithOp::Abs};
  int monotone = 0;
  const int cases = 10000;
  for (int i = 0; i < cases; ++i) {
    auto op = ops[i % 6];
    Interval a = interval();
    Interval b = interval();
    if (op == rigor::ArithOp::Div && b.contains_zero()) b = Interval(b.hi() + 1, b.hi() + 2);
    Interval a2 = rigor::hull(a, interval());
    Interval b2 = op == rigor::ArithOp::Div ? b : rigor::hull(b, interval());
    if (rigor::arith(op, a2, b2).contains(rigor::arith(op, a, b))) ++monotone;
  }
  out.push_back({"inclusion monotonicity in " + std::to_string(monotone) + " of " + std::to_string(cases) +
                     " random cases",
                 monotone == cases});

  const long levels[] = {64, 128, 256, 512};
  auto nested = [&](const std::function<Interval(long)>& f) {
    Interval prev = f(levels[0]);
    for (std::size_t i = 1; i < std::size(levels); ++i) {
      Interval next = f(levels[i]);
      if (!prev.contains(next)) return false;
      prev = next;
    }
    return true;
  };
  using namespace specfun;
  const std::pair<const char*, std::function<Interval(long)>> ops_by_name[] = {
      {"pi", [](long p) { return pi_enclosure(p); }},
      {"exp", [](long p) { return exp_enclosure(Interval(frac(23, 50)), p); }},
      {"log", [](long p) { return log_enclosure(Interval(frac(6894, 1000)), p); }},
      {"sqrt", [](long p) { return sqrt_enclosure(Interval(5), p); }},
      {"pow", [](long p) { return pow_enclosure(Interval(frac(21512, 1000)), Interval(frac(39, 10)), p); }},
      {"gamma", [](long p) { return gamma_enclosure(Interval(frac(599, 200)), p); }},
      {"zeta", [](long p) { return zeta_real_enclosure(Interval(frac(11, 5)), p); }},
      {"hurwitz zeta", [](long p) { return hurwitz_zeta_enclosure(Interval(3), frac(2, 5), p); }},
      {"alpha", [](long p) { return alpha_enclosure(Interval(frac(599, 100)), p); }},
      {"dirichlet L", [](long p) { return dirichlet_L_enclosure(8, Interval(2), p); }},
      {"stirling", [](long p) { return stirling_bounds(29, p).lower; }},
  };
  for (const auto& [name, f] : ops_by_name) {
    out.push_back({std::string("refinement never widens: ") + name, nested(f)});
  }

  bool stirling = true;
  for (unsigned long n = 1; n <= 100; ++n) {
    auto b = stirling_bounds(n);
    Rational f(rigor::factorial(n));
    stirling = stirling && b.lower.hi() < f && f < b.upper.lo();
  }
  out.push_back({"Stirling brackets n! for n <= 100", stirling});

  bool zeta = true;
  Interval pi = pi_enclosure(320);
  for (unsigned j = 1; j <= 10; ++j) {
    long s = 2 * static_cast<long>(j);
    Interval z = zeta_real_enclosure(Interval(s));
    Interval closed = Interval(zeta_even_exact(j)) * rigor::pow(pi, s);
    zeta = zeta && rigor::overlaps(z, closed) && rigor::overlaps(z, oracles::mpfr_zeta(Rational(s)));
  }
  out.push_back({"zeta(2j) agrees with the Bernoulli closed form and MPFR for j <= 10", zeta});
  return out;
}

const std::function<Checks()> kCriteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                                             criterion_5, criterion_6, criterion_7, criterion_8,
                                             criterion_9, criterion_10, criterion_11};

bool run(int n) {
  Checks checks;
  try {
    checks = kCriteria[n - 1]();
  } catch (const std::exception& e) {
    checks.push_back({std::string("error: ") + e.what(), false});
  }
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.ok;
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) std::cout << "  " << (c.ok ? "ok    " : "FAILED") << " " << c.what << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr int kCount = static_cast<int>(std::size(kCriteria));
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    int n = std::atoi(argv[2]);
    if (n < 1 || n > kCount) {
      std::cerr << "criterion must be 1.." << kCount << "\n";
      return 2;
    }
    return run(n) ? 0 : 1;
  }
  if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }
  bool all = true;
  for (int n = 1; n <= kCount; ++n) all = run(n) && all;
  return all ? 0 : 1;
}
