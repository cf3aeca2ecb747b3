#include <istream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "covcert/certifier.hpp"
#include "covcert/error.hpp"

namespace covcert::certifier {

using json = nlohmann::ordered_json;
using rigor::Comparison;

namespace {

constexpr int kDigits = 12;

json interval_json(const Interval& x) {
  return json{{"lo", rigor::to_string(x.lo())}, {"hi", rigor::to_string(x.hi())}};
}

std::string emit_json(const Certificate& cert) {
  json doc;
  doc["schema"] = std::string(kSchema);
  doc["rank"] = cert.rank;
  doc["precision_bits"] = cert.precision_bits;
  json data = json::array();
  for (const auto& d : cert.data) data.push_back({{"file", d.file}, {"sha256", d.sha256}});
  doc["data"] = data;
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json j;
    j["id"] = s.id;
    j["claim"] = s.claim;
    j["anchor"] = s.anchor;
    j["verdict"] = std::string(to_string(s.verdict));
    j["precision_bits"] = s.precision_bits;
    if (!s.exact.empty()) j["exact"] = s.exact;
    j["dependencies"] = s.dependencies;
    json enc = json::array();
    for (const auto& e : s.enclosures) {
      json item = interval_json(e.value);
      item["name"] = e.name;
      enc.push_back(item);
    }
    j["enclosures"] = enc;
    json cmp = json::array();
    for (const auto& c : s.comparisons) {
      cmp.push_back({{"label", c.label},
                     {"lhs", interval_json(c.lhs)},
                     {"relation", std::string(rigor::relation_symbol(c.rel))},
                     {"rhs", interval_json(c.rhs)},
                     {"truth", std::string(rigor::truth_name(c.evaluate()))}});
    }
    j["comparisons"] = cmp;
    steps.push_back(j);
  }
  doc["steps"] = steps;
  doc["surviving_fields_after_global"] = cert.surviving_fields_after_global;
  doc["surviving_fields_after_local"] = cert.surviving_fields_after_local;
  doc["final_conclusion"] = cert.final_conclusion;
  return doc.dump(2) + "\n";
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out.empty() ? "-" : out;
}

std::string emit_text(const Certificate& cert) {
  std::ostringstream out;
  out << "covcert report, rank n = " << cert.rank << ", " << cert.precision_bits << " bits\n";
  for (const auto& d : cert.data) out << "data " << d.file << " sha256 " << d.sha256 << "\n";
  out << "\n";
  for (const auto& s : cert.steps) {
    out << "[" << to_string(s.verdict) << "] " << s.id << "\n";
    out << "  " << s.claim << "\n";
    if (!s.dependencies.empty()) out << "  after: " << join(s.dependencies) << "\n";
    if (!s.exact.empty()) out << "  exact: " << s.exact << "\n";
    for (const auto& e : s.enclosures) out << "  " << e.name << " = " << rigor::to_decimal(e.value, kDigits) << "\n";
    for (const auto& c : s.comparisons) {
      out << "  " << c.label << ": " << rigor::to_decimal(c.lhs, kDigits) << " " << rigor::relation_symbol(c.rel)
          << " " << rigor::to_decimal(c.rhs, kDigits) << " (" << rigor::truth_name(c.evaluate()) << ")\n";
    }
  }
  out << "\nsurviving after global stage: " << join(cert.surviving_fields_after_global) << "\n";
  out << "surviving after local stage: " << join(cert.surviving_fields_after_local) << "\n";
  out << "conclusion: " << cert.final_conclusion << "\n";
  return out.str();
}

[[noreturn]] void schema(const std::string& why) { throw Error(Errc::SchemaMismatch, why); }
[[noreturn]] void tamper(const std::string& why) { throw Error(Errc::TamperDetected, why); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string text_of(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) schema(std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

Interval interval_of(const json& obj) {
  try {
    return Interval(rigor::parse_rational(text_of(obj, "lo")), rigor::parse_rational(text_of(obj, "hi")));
  } catch (const Error& e) {
    if (e.code() == Errc::SchemaMismatch) throw;
    schema(std::string("bad interval: ") + e.what());
  }
}

}  // namespace

std::string emit_report(const Certificate& cert, Format format) {
  return format == Format::Json ? emit_json(cert) : emit_text(cert);
}

VerifyResult verify_report_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    schema(std::string("not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema") || !doc["schema"].is_string()) schema("no schema tag");
  if (doc["schema"].get<std::string>() != kSchema) {
    schema("schema '" + doc["schema"].get<std::string>() + "', expected '" + std::string(kSchema) + "'");
  }

  VerifyResult result;
  const json& rank = field(doc, "rank");
  if (!rank.is_number_integer()) schema("rank is not an integer");
  result.rank = rank.get<int>();

  const json& steps = field(doc, "steps");
  if (!steps.is_array()) schema("steps is not an array");
  std::map<std::string, Verdict> seen;
  std::set<std::string> axioms;
  bool all_proved = true;
  bool any_failed = false;
  bool any_tie = false;
  for (const json& s : steps) {
    std::string id = text_of(s, "id");
    if (seen.count(id)) tamper("duplicate step " + id);
    Verdict recorded = parse_verdict(text_of(s, "verdict"));

    std::vector<Comparison> comparisons;
    const json& cmp = field(s, "comparisons");
    if (!cmp.is_array()) schema("comparisons of " + id + " is not an array");
    for (const json& c : cmp) {
      Comparison k{text_of(c, "label"), interval_of(field(c, "lhs")), rigor::Relation::Less,
                   interval_of(field(c, "rhs"))};
      try {
        k.rel = rigor::parse_relation(text_of(c, "relation"));
      } catch (const Error&) {
        schema("unknown relation in " + id);
      }
      if (rigor::truth_name(k.evaluate()) != text_of(c, "truth")) {
        tamper(id + ": comparison '" + k.label + "' does not evaluate to the recorded truth");
      }
      comparisons.push_back(std::move(k));
    }
    result.comparisons += comparisons.size();

    std::vector<Verdict> deps;
    const json& dep = field(s, "dependencies");
    if (!dep.is_array()) schema("dependencies of " + id + " is not an array");
    for (const json& d : dep) {
      if (!d.is_string()) schema("dependency of " + id + " is not a string");
      auto it = seen.find(d.get<std::string>());
      if (it == seen.end()) tamper(id + " depends on " + d.get<std::string>() + ", which does not precede it");
      deps.push_back(it->second);
    }

    Verdict expected;
    if (recorded == Verdict::Axiom || is_axiom_id(id)) {
      if (!is_axiom_id(id) || recorded != Verdict::Axiom || !comparisons.empty() || !deps.empty()) {
        tamper(id + ": only the listed axioms may carry the Axiom verdict");
      }
      expected = Verdict::Axiom;
      axioms.insert(id);
    } else {
      expected = derive_verdict(comparisons, deps);
    }
    if (expected != recorded) {
      tamper(id + ": recorded " + std::string(to_string(recorded)) + ", the enclosures give " +
             std::string(to_string(expected)));
    }
    all_proved = all_proved && (expected == Verdict::Proved || expected == Verdict::Axiom);
    any_failed = any_failed || expected == Verdict::Failed;
    any_tie = any_tie || expected == Verdict::Tie;
    seen.emplace(id, expected);
  }
  result.steps = seen.size();

  std::string conclusion = text_of(doc, "final_conclusion");
  if ((conclusion == kConclusion) != all_proved) tamper("final conclusion does not match the step verdicts");
  if (all_proved) {
    bool rank_two = result.rank == 2;
    for (auto id : kAxiomIds) {
      bool expect = id != "A1_quaternion_parity" || rank_two;
      if (axioms.count(std::string(id)) != (expect ? 1u : 0u)) tamper("unexpected set of axioms");
    }
    if (axioms.size() != (rank_two ? 5u : 4u)) tamper("unexpected set of axioms");
  }
  result.verdict = any_failed ? Verdict::Failed : any_tie ? Verdict::Tie : Verdict::Proved;
  return result;
}

VerifyResult verify_report(std::istream& source) {
  std::string text((std::istreambuf_iterator<char>(source)), std::istreambuf_iterator<char>());
  return verify_report_text(text);
}

}  // namespace covcert::certifier
