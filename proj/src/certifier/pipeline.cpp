#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>

#include "covcert/bounds.hpp"
#include "covcert/certifier.hpp"
#include "covcert/digest.hpp"
#include "covcert/error.hpp"
#include "covcert/localfactors.hpp"
#include "covcert/optimizer.hpp"
#include "covcert/specfun.hpp"

namespace covcert::certifier {

using bounds::OdlyzkoPair;
using numberfields::NumberFieldRecord;
using rigor::Comparison;
using rigor::frac;
using rigor::Truth;

namespace fs = std::filesystem;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "Proved";
    case Verdict::Failed: return "Failed";
    case Verdict::Axiom: return "Axiom";
    case Verdict::Tie: return "Tie";
  }
  return "?";
}

Verdict parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::Proved, Verdict::Failed, Verdict::Axiom, Verdict::Tie}) {
    if (to_string(v) == name) return v;
  }
  throw Error(Errc::SchemaMismatch, "unknown verdict '" + std::string(name) + "'");
}

bool is_axiom_id(std::string_view id) {
  return std::find(std::begin(kAxiomIds), std::end(kAxiomIds), id) != std::end(kAxiomIds);
}

Verdict Certificate::status() const {
  bool tie = false;
  for (const auto& s : steps) {
    if (s.verdict == Verdict::Failed) return Verdict::Failed;
    tie = tie || s.verdict == Verdict::Tie;
  }
  return tie ? Verdict::Tie : Verdict::Proved;
}

const Step* Certificate::find(std::string_view id) const {
  for (const auto& s : steps) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

Verdict derive_verdict(const std::vector<Comparison>& comparisons, const std::vector<Verdict>& dependencies) {
  bool failed = false;
  bool open = false;
  for (const auto& c : comparisons) {
    Truth t = c.evaluate();
    failed = failed || t == Truth::Fails;
    open = open || t == Truth::Undecided;
  }
  for (Verdict v : dependencies) {
    failed = failed || v == Verdict::Failed;
    open = open || v == Verdict::Tie;
  }
  if (failed) return Verdict::Failed;
  return open ? Verdict::Tie : Verdict::Proved;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("COVCERT_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return COVCERT_DEFAULT_DATA_DIR;
}

void require_proved(const Certificate& cert) {
  for (const auto& s : cert.steps) {
    if (s.verdict == Verdict::Failed || s.verdict == Verdict::Tie) {
      throw Error(Errc::StepFailed, s.id + " (" + std::string(to_string(s.verdict)) + "): " + s.claim);
    }
  }
}

namespace {

Interval num(const Rational& r) { return Interval(r); }
Interval num(long v) { return Interval(Rational(v)); }

std::string str(long v) { return std::to_string(v); }

class Case {
 public:
  Case(int n, const Config& config) : n_(n), bits_(config.precision_bits), config_(config) {
    if (n < 2) throw Error(Errc::InvalidArgument, "rank must be at least 2");
    std::string dir = default_data_dir();
    std::string fields = config.fields_path.empty() ? (fs::path(dir) / "fields.txt").string() : config.fields_path;
    std::string odlyzko =
        config.odlyzko_path.empty() ? (fs::path(dir) / "odlyzko.csv").string() : config.odlyzko_path;
    for (const auto& path : {fields, odlyzko}) {
      if (!fs::exists(path)) throw Error(Errc::DataMissing, "missing data file " + path);
    }
    catalog_ = numberfields::load_catalog_file(fields);
    complete_ = numberfields::load_completeness_file(fields);
    table_ = bounds::load_odlyzko_file(odlyzko);
    cert_.rank = n;
    cert_.precision_bits = bits_;
    cert_.data.push_back({"fields.txt", sha256_hex(read_file(fields))});
    cert_.data.push_back({"odlyzko.csv", sha256_hex(read_file(odlyzko))});
  }

  Certificate run();

 private:
  Step& add(Step s) {
    std::vector<Verdict> deps;
    for (const auto& d : s.dependencies) {
      const Step* found = cert_.find(d);
      if (found == nullptr) throw Error(Errc::InvariantViolation, "step " + s.id + " depends on unknown " + d);
      deps.push_back(found->verdict);
    }
    if (s.precision_bits == 0) s.precision_bits = bits_;
    s.verdict = derive_verdict(s.comparisons, deps);
    cert_.steps.push_back(std::move(s));
    return cert_.steps.back();
  }

  void axiom(std::string id, std::string claim, std::string anchor) {
    Step s;
    s.id = std::move(id);
    s.claim = std::move(claim);
    s.anchor = std::move(anchor);
    s.precision_bits = bits_;
    s.verdict = Verdict::Axiom;
    cert_.steps.push_back(std::move(s));
  }

  void common_prefix();
  void rank_at_least_four();
  void rank_three();
  void rank_two();
  void local_stage();

  std::vector<NumberFieldRecord> prune_by_bounds(const std::string& id, const std::string& claim,
                                                 const std::map<int, Interval>& bounds,
                                                 std::vector<std::string> deps);
  std::vector<NumberFieldRecord> prune_by_proto(const std::string& id, const std::vector<NumberFieldRecord>& fields,
                                                std::vector<std::string> deps);
  std::vector<NumberFieldRecord> prune_by_quotient(const std::string& id,
                                                   const std::vector<NumberFieldRecord>& fields,
                                                   std::vector<std::string> deps);

  optimizer::Options options() const { return optimizer::Options{bits_, config_.threads}; }

  int n_;
  long bits_;
  Config config_;
  std::vector<NumberFieldRecord> catalog_;
  std::map<int, long> complete_;
  std::vector<OdlyzkoPair> table_;
  Certificate cert_;
  std::vector<std::string> global_survivors_;
};

void Case::common_prefix() {
  axiom("A5_existence",
        "A lattice of minimal covolume exists; it is the normalizer of a principal arithmetic subgroup "
        "of a K-form of Sp_2n over a totally real field K, split at exactly one real place",
        "existence of minimal lattices (Kazhdan-Margulis) and arithmeticity");
  axiom("A3_odlyzko_table", "For each vendored pair (A, E), every totally real field of degree d has D > A^d e^-E",
        "Odlyzko discriminant bounds, unconditional table");
  axiom("A4_index_bound", "[Gamma : Lambda] <= h 2^#T [U+ : U^2] with [U+ : U^2] <= 2^(d-1)",
        "index bound from Galois cohomology");

  std::string psi_id = "psi" + str(n_) + "_exact";
  Rational psi = bounds::Psi_exact(n_);
  Step s;
  s.id = psi_id;
  s.claim = "Psi(" + str(n_) + ") = prod zeta(2j) Pi(" + str(n_) + ") is the exact rational " + rigor::to_string(psi);
  s.anchor = "covolume of Sp_2n(Z)";
  s.exact = rigor::to_string(psi);
  Interval from_zeta = bounds::Psi_interval(n_, bits_);
  s.enclosures.push_back({"Psi from zeta enclosures", from_zeta});
  s.comparisons.push_back({"exact value inside the enclosure", num(psi), rigor::Relation::Within, from_zeta});
  add(std::move(s));

  Step u;
  u.id = "psi_upper";
  u.claim = "Psi(n) < 1.83 Pi(n), from the infinite product of zeta(2j)";
  u.anchor = "upper bound for the covolume of Sp_2n(Z)";
  u.dependencies = {psi_id};
  Interval partial = bounds::zeta_product_partial(20, true, bits_);
  Interval pi_n = bounds::Pi_n(n_, bits_).value;
  u.enclosures.push_back({"prod_{j<=20} zeta(2j) with tail", partial});
  u.enclosures.push_back({"Pi(" + str(n_) + ")", pi_n});
  u.comparisons.push_back(rigor::less("zeta product < 1.83", partial, num(bounds::c_1_83())));
  u.comparisons.push_back(rigor::less("Psi(n) < 1.83 Pi(n)", num(psi), num(bounds::c_1_83()) * pi_n));
  add(std::move(u));
}

void Case::rank_at_least_four() {
  auto search = optimizer::find_lemma35_pair(table_, bits_);
  const OdlyzkoPair& p = search.chosen;
  bounds::Lemma35Verdicts v;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == p) v = search.verdicts[i];
  }
  Step s;
  s.id = "lemma35_pair";
  s.claim = "The pair " + bounds::to_string(p) + " satisfies the three conditions on (A, E)";
  s.anchor = "choice of Odlyzko pair for ranks n >= 4";
  s.dependencies = {"A3_odlyzko_table"};
  s.comparisons = {v.a, v.b, v.c};
  add(std::move(s));

  // Claim (b): 7.6 e^0.46 A^f(m) Pi(m) >= 1 for all m >= 3. Checked directly up
  // to m = 8; beyond, Pi(m+1)/Pi(m) > 1 and grows, and A^f(m) grows.
  Step b;
  b.id = "claim_b_all_ranks";
  b.claim = "d -> O(m, d, A, E) is non-decreasing for every m >= 3";
  b.anchor = "monotonicity in the degree";
  b.dependencies = {"lemma35_pair"};
  for (int m = 3; m <= 8; ++m) {
    b.comparisons.push_back(
        rigor::greater_eq("base at m = " + str(m) + " >= 1", bounds::lemma35_b_value(p.A, m, bits_), num(1)));
  }
  b.comparisons.push_back(rigor::greater("Pi(9)/Pi(8) > 1", bounds::Pi_ratio(8, bits_), num(1)));
  Interval two_pi_sq = rigor::pow(num(2) * specfun::pi_enclosure(bits_), 2);
  b.comparisons.push_back(rigor::greater("(2m+2)(2m+3) > (2 pi)^2 from m = 2", num(42), two_pi_sq));
  b.comparisons.push_back(rigor::greater("A > 1", num(p.A), num(1)));
  add(std::move(b));

  Step a;
  a.id = "claim_a_c";
  a.claim = "Pi(m)^-1 O(m, 2, A, E) is increasing in m and exceeds 1.83 at m = 4";
  a.anchor = "monotonicity in the rank";
  a.dependencies = {"lemma35_pair"};
  a.enclosures.push_back({"log ratio lower bound at m = 2", bounds::claim_a_stirling_lower(2, p, bits_)});
  for (int m = 2; m <= 8; ++m) {
    a.comparisons.push_back(rigor::greater_eq("log ratio at m = " + str(m) + " >= 0",
                                              bounds::claim_a_log_ratio(m, p, bits_), num(0)));
  }
  Interval at4 = bounds::O_bound(4, 2, p, bits_) / bounds::Pi_n(4, bits_).value;
  a.comparisons.push_back(rigor::greater("Pi(4)^-1 O(4, 2) > 1.83", at4, num(bounds::c_1_83())));
  add(std::move(a));

  Step r;
  r.id = "rank_exclusion";
  r.claim = "For n = " + str(n_) + " every field of degree >= 2 gives covolume above 1.83 Pi(n) > Psi(n)";
  r.anchor = "ranks n >= 4 come from Q";
  r.dependencies = {"claim_a_c", "claim_b_all_ranks", "psi_upper", "A4_index_bound", "A5_existence"};
  Interval here = bounds::O_bound(n_, 2, p, bits_) / bounds::Pi_n(n_, bits_).value;
  r.enclosures.push_back({"Pi(n)^-1 O(n, 2, A, E)", here});
  r.comparisons.push_back(rigor::greater("Pi(n)^-1 O(n, 2) > 1.83", here, num(bounds::c_1_83())));
  add(std::move(r));
  global_survivors_ = {"1.1.1.1"};
}

std::vector<NumberFieldRecord> Case::prune_by_bounds(const std::string& id, const std::string& claim,
                                                     const std::map<int, Interval>& bounds,
                                                     std::vector<std::string> deps) {
  Step s;
  s.id = id;
  s.claim = claim;
  s.anchor = "discriminant bounds and the field catalog";
  s.dependencies = std::move(deps);
  std::vector<NumberFieldRecord> kept;
  for (const auto& [d, bound] : bounds) {
    s.enclosures.push_back({"D bound, d = " + str(d), bound});
    auto limit = complete_.find(d);
    Interval L = limit == complete_.end() ? num(0) : num(limit->second);
    s.comparisons.push_back(rigor::less_eq("catalog complete for d = " + str(d), bound, L));
    for (const auto& f : catalog_) {
      if (f.degree != d) continue;
      Interval D = num(f.discriminant);
      if (D.hi() < bound.lo()) {
        s.comparisons.push_back(rigor::less(f.label + " below the bound", D, bound));
        kept.push_back(f);
      } else {
        s.comparisons.push_back(rigor::greater_eq(f.label + " excluded", D, bound));
      }
    }
  }
  add(std::move(s));
  return kept;
}

std::vector<NumberFieldRecord> Case::prune_by_proto(const std::string& id,
                                                    const std::vector<NumberFieldRecord>& fields,
                                                    std::vector<std::string> deps) {
  Step s;
  s.id = id;
  s.claim = "Refined discriminant bound with the known class number";
  s.anchor = "proto discriminant bound";
  s.dependencies = std::move(deps);
  std::vector<NumberFieldRecord> kept;
  std::map<std::pair<int, long>, Interval> cache;
  for (const auto& f : fields) {
    auto key = std::pair{f.degree, f.class_number};
    if (!cache.count(key)) {
      cache[key] = bounds::proto_D_bound(n_, f.degree, f.class_number, bits_);
      s.enclosures.push_back({"d = " + str(f.degree) + ", h = " + str(f.class_number), cache[key]});
    }
    const Interval& bound = cache[key];
    Interval D = num(f.discriminant);
    if (D.hi() < bound.lo()) {
      s.comparisons.push_back(rigor::less(f.label + " below the bound", D, bound));
      kept.push_back(f);
    } else {
      s.comparisons.push_back(rigor::greater_eq(f.label + " excluded", D, bound));
    }
  }
  add(std::move(s));
  return kept;
}

std::vector<NumberFieldRecord> Case::prune_by_quotient(const std::string& id,
                                                       const std::vector<NumberFieldRecord>& fields,
                                                       std::vector<std::string> deps) {
  Step s;
  s.id = id;
  s.claim = "Quotients Psi(n) / (S / 2^(2d-1)) adjusted by the unit index; below 1 excludes the field";
  s.anchor = "covolume quotients and totally positive units";
  s.dependencies = std::move(deps);
  std::vector<NumberFieldRecord> kept;
  for (const auto& f : fields) {
    if (f.degree == 1) {
      kept.push_back(f);
      continue;
    }
    auto exact = bounds::quotient_exact(f, n_);
    Interval q = exact ? num(*exact) : bounds::quotient(f, n_, bits_);
    if (exact) s.exact += (s.exact.empty() ? "" : ", ") + f.label + ": " + rigor::to_string(*exact);
    long index = 0;
    std::string index_kind = "exact";
    try {
      index = numberfields::totally_positive_index(f);
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedField) throw;
      index = numberfields::totally_positive_index_upper(f);
      index_kind = "upper bound";
    }
    Interval adjusted = bounds::adjusted_quotient(q, f, index);
    s.enclosures.push_back({f.label + " quotient", q});
    s.enclosures.push_back({f.label + " unit index (" + index_kind + ")", num(index)});
    s.enclosures.push_back({f.label + " adjusted quotient", adjusted});
    bool local_route = n_ == 2 && f.degree == 2 && f.discriminant == 5;
    if (local_route && !(adjusted.hi() < 1)) {
      s.comparisons.push_back(rigor::greater_eq(f.label + " survives to the local stage", adjusted, num(1)));
      kept.push_back(f);
    } else {
      s.comparisons.push_back(rigor::less(f.label + " excluded", adjusted, num(1)));
    }
  }
  add(std::move(s));
  return kept;
}

void Case::rank_three() {
  auto r = optimizer::optimize_n3(table_, options());
  Step t;
  t.id = "n3_degree_threshold";
  t.claim = "d > (7.5 E - 8.25) / (7.5 log A - 12.99) excludes the degree; the best pair is " +
            bounds::to_string(r.best_pair);
  t.anchor = "degree threshold for n = 3";
  t.dependencies = {"A3_odlyzko_table", "psi_upper", "A4_index_bound"};
  t.precision_bits = r.precision_bits;
  t.enclosures.push_back({"threshold", r.best_value});
  t.comparisons.push_back(rigor::less("threshold < 4", r.best_value, num(4)));
  add(std::move(t));

  std::map<int, Interval> b;
  for (int d = 2; d <= 3; ++d) b[d] = bounds::n3_D_bound(d, bits_);
  auto kept = prune_by_bounds("n3_discriminant_bounds", "Degrees 2 and 3 need D below the n = 3 bounds", b,
                              {"n3_degree_threshold", "psi_upper"});
  kept = prune_by_proto("n3_proto_bounds", kept, {"n3_discriminant_bounds"});
  kept = prune_by_quotient("n3_quotients", kept, {"n3_proto_bounds", "A4_index_bound", "psi3_exact"});
  global_survivors_.clear();
  for (const auto& f : kept) global_survivors_.push_back(f.label);
  global_survivors_.push_back("1.1.1.1");
}

void Case::rank_two() {
  auto r = optimizer::optimize_n2(table_, options());
  Step t;
  t.id = "n2_degree_threshold";
  t.claim = "For d above the optimized threshold the covolume exceeds Psi(2); best (A, E, t) = " +
            bounds::to_string(r.best_pair) + ", " + rigor::to_decimal(*r.best_t, 6);
  t.anchor = "degree threshold for n = 2";
  t.dependencies = {"A3_odlyzko_table", "psi2_exact", "A4_index_bound"};
  t.precision_bits = r.precision_bits;
  t.enclosures.push_back({"threshold", r.best_value});
  t.comparisons.push_back(rigor::less("threshold < 6", r.best_value, num(6)));
  add(std::move(t));

  Step c;
  c.id = "n2_base_constant";
  c.claim = "3 e^0.46 / (64 pi^6) alpha(2.2) > 0.00019, and 25 t (t+1) = 66 at t = 1.2";
  c.anchor = "constants of the n = 2 discriminant bound";
  Interval base = num(3) * specfun::exp_enclosure(num(frac(46, 100)), bits_) /
                  (num(64) * rigor::pow(specfun::pi_enclosure(bits_), 6)) *
                  specfun::alpha_enclosure(num(frac(11, 5)), bits_);
  c.enclosures.push_back({"3 e^0.46 / (64 pi^6) alpha(2.2)", base});
  c.comparisons.push_back(rigor::greater("base > 0.00019", base, num(bounds::c_0_00019())));
  c.comparisons.push_back({"25 t (t+1) = 66", num(frac(6, 5) * frac(11, 5) * 25), rigor::Relation::Within, num(66)});
  add(std::move(c));

  std::map<int, Interval> b;
  for (int d = 2; d <= 5; ++d) b[d] = bounds::n2_D_bound(d, bits_);
  auto kept = prune_by_bounds("n2_discriminant_bounds", "Degrees 2 to 5 need D below the n = 2 bounds", b,
                              {"n2_degree_threshold", "n2_base_constant", "psi2_exact"});
  kept = prune_by_proto("n2_proto_bounds", kept, {"n2_discriminant_bounds"});
  kept = prune_by_quotient("n2_quotients", kept, {"n2_proto_bounds", "A4_index_bound", "psi2_exact"});
  global_survivors_.clear();
  for (const auto& f : kept) global_survivors_.push_back(f.label);
  global_survivors_.push_back("1.1.1.1");
}

void Case::local_stage() {
  std::vector<std::string> after;
  std::vector<std::string> local_deps;
  for (const auto& label : global_survivors_) {
    if (label == "1.1.1.1") {
      after.push_back(label);
      continue;
    }
    const auto& f = numberfields::find_field(catalog_, label);
    if (n_ == 2 && f.degree == 2 && f.discriminant == 5) {
      axiom("A1_quaternion_parity",
            "A quaternion algebra over Q(sqrt 5) split at every finite place is ramified at an even number of "
            "real places, so G would be split or compact at both real places",
            "parity of ramification of quaternion algebras");
      auto x = localfactors::qsqrt5_local_exclusion(f);
      Step s;
      s.id = "qsqrt5_local";
      s.claim = "Q(sqrt 5): no place has residue field of size 2 or 3, so every e' = 1 unless "
                "prod e' > 5 * 2^#T, and the parity axiom rules out the split form";
      s.anchor = "local factors for Q(sqrt 5) at n = 2";
      s.dependencies = {"n2_quotients", "A1_quaternion_parity", "A4_index_bound"};
      for (const auto& st : x.places) {
        for (const auto& pl : st.places) {
          s.enclosures.push_back({"q above " + str(st.p) + " (" + numberfields::to_string(st.kind) + ")",
                                  num(Rational(pl.q))});
        }
      }
      s.enclosures.push_back({"T(4)", num(localfactors::T_factor(4))});
      s.comparisons = x.checks;
      add(std::move(s));
      local_deps.push_back("qsqrt5_local");
      continue;
    }
    Step s;
    s.id = "unhandled_" + label;
    s.claim = label + " survives the global stage and has no local argument";
    s.anchor = "global stage";
    s.comparisons.push_back(rigor::less(label + " excluded", num(1), num(0)));
    local_deps.push_back(s.id);
    add(std::move(s));
  }

  Step sp;
  sp.id = "local_special";
  sp.claim = "Over Q, e' of a special non-hyperspecial parahoric exceeds 2 = the index contribution per place";
  sp.anchor = "special parahorics over Q";
  sp.dependencies = {"A4_index_bound"};
  for (long q : {2L, 3L}) {
    Interval e = num(Rational(localfactors::eprime_special(n_, q)));
    sp.enclosures.push_back({"e'(n = " + str(n_) + ", q = " + str(q) + ")", e});
    sp.comparisons.push_back(rigor::greater("e' > 2 at q = " + str(q), e, num(2)));
  }
  add(std::move(sp));

  Step ns;
  ns.id = "local_nonspecial";
  ns.claim = "Over Q, a non-special parahoric has e' / #Xi > 1, so it cannot occur in a minimal lattice";
  ns.anchor = "non-special parahorics";
  ns.dependencies = {"local_special"};
  for (long q : {2L, 3L}) ns.comparisons.push_back(localfactors::nonspecial_gt_two(q, n_));
  for (long q : {2L, 3L}) {
    ns.enclosures.push_back({"h(" + str(q) + ", " + str(n_) + ")", localfactors::h_rigidity(q, n_)});
  }
  add(std::move(ns));

  axiom("A2_identification",
        "A Q-form split at every place with hyperspecial parahorics everywhere is Sp_2n over Q, and the "
        "lattice is conjugate to Sp_2n(Z) (class number one, strong approximation)",
        "identification of the lattice");

  Step c;
  c.id = "conclusion";
  c.claim = "Gamma is conjugate to Sp_" + str(2 * n_) + "(Z)";
  c.anchor = "main result";
  c.dependencies = local_deps;
  for (const char* d : {"local_special", "local_nonspecial", "A2_identification", "A5_existence"}) {
    c.dependencies.push_back(d);
  }
  for (const auto& s : cert_.steps) {
    if (s.id == "rank_exclusion" || s.id == "n3_quotients" || s.id == "n2_quotients" ||
        s.id == "global_stage_error") {
      c.dependencies.push_back(s.id);
    }
  }
  add(std::move(c));
  cert_.surviving_fields_after_local = after;
}

Certificate Case::run() {
  common_prefix();
  try {
    if (n_ >= 4) {
      rank_at_least_four();
    } else if (n_ == 3) {
      rank_three();
    } else {
      rank_two();
    }
  } catch (const Error& e) {
    if (e.code() == Errc::DataMissing || e.code() == Errc::ChecksumMismatch) throw;
    Step s;
    s.id = "global_stage_error";
    s.claim = e.what();
    s.anchor = "global stage";
    s.comparisons.push_back(rigor::less("global stage completed", num(1), num(0)));
    add(std::move(s));
    global_survivors_ = {"1.1.1.1"};
  }
  cert_.surviving_fields_after_global = global_survivors_;
  local_stage();
  cert_.final_conclusion = cert_.status() == Verdict::Proved ? kConclusion : kNotProved;
  return cert_;
}

}  // namespace

Certificate run_case(int n, const Config& config) { return Case(n, config).run(); }

}  // namespace covcert::certifier
