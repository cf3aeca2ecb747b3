#include <algorithm>
#include <filesystem>
#include <istream>
#include <map>
#include <sstream>

#include "covcert/digest.hpp"
#include "covcert/error.hpp"
#include "covcert/numberfields.hpp"

namespace covcert::numberfields {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const std::string& what, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::MalformedCatalog, "line " + std::to_string(line) + ": bad " + what + " '" + s + "'");
}

Poly parse_coefficients(const std::string& s, int line) {
  Poly out;
  for (const auto& item : split(s, ',')) {
    try {
      out.push_back(rigor::parse_rational(strip(item)));
    } catch (const Error&) {
      throw Error(Errc::MalformedCatalog, "line " + std::to_string(line) + ": bad coefficient '" + item + "'");
    }
  }
  return out;
}

void check_invariants(NumberFieldRecord& r) {
  auto fail = [&](const std::string& why) {
    throw Error(Errc::InvariantViolation, r.label + ": " + why);
  };
  if (degree(r.polynomial) != r.degree) fail("degree does not match the polynomial");
  if (r.polynomial.back() != 1) fail("polynomial is not monic");
  for (const auto& c : r.polynomial) {
    if (c.get_den() != 1) fail("polynomial is not integral");
  }
  if (r.degree == 1 && (r.discriminant != 1 || r.class_number != 1)) fail("degree 1 must be Q with D = h = 1");
  if (r.discriminant < 1 || r.class_number < 1) fail("D and h must be positive");
  Rational disc = discriminant(r.polynomial);
  if (disc == 0) fail("polynomial is not squarefree");
  Rational q = disc / r.discriminant;
  Integer root;
  if (q.get_den() != 1 || q < 0 || !mpz_perfect_square_p(q.get_num_mpz_t())) {
    fail("polynomial discriminant is not D times a square");
  }
  mpz_sqrt(root.get_mpz_t(), q.get_num_mpz_t());
  r.polynomial_index = root;
  r.is_totally_real = count_real_roots(r.polynomial) == r.degree;
  if (!r.is_totally_real) fail("not totally real");
  for (const auto& u : r.units) {
    Rational norm = resultant(r.polynomial, u);
    if (norm != 1 && norm != -1) fail("listed unit has norm " + rigor::to_string(norm));
  }
}

}  // namespace

std::vector<NumberFieldRecord> load_catalog(std::istream& source) {
  std::vector<NumberFieldRecord> out;
  std::string raw;
  int line = 0;
  while (std::getline(source, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string text = strip(raw);
    if (text.empty()) continue;
    auto cols = split(text, '|');
    if (strip(cols[0]) == "complete") continue;
    if (cols.size() != 5 && cols.size() != 6) {
      throw Error(Errc::MalformedCatalog, "line " + std::to_string(line) + ": expected 5 or 6 fields");
    }
    NumberFieldRecord r;
    r.label = strip(cols[0]);
    if (r.label.empty()) throw Error(Errc::MalformedCatalog, "line " + std::to_string(line) + ": empty label");
    r.degree = static_cast<int>(parse_long(strip(cols[1]), "degree", line));
    r.discriminant = parse_long(strip(cols[2]), "discriminant", line);
    r.class_number = parse_long(strip(cols[3]), "class number", line);
    r.polynomial = parse_coefficients(cols[4], line);
    if (cols.size() == 6 && !strip(cols[5]).empty()) {
      for (const auto& u : split(strip(cols[5]), ';')) r.units.push_back(trim(parse_coefficients(u, line)));
    }
    if (r.degree < 1 || r.degree > 5) throw Error(Errc::MalformedCatalog, r.label + ": degree out of range");
    check_invariants(r);
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.discriminant < b.discriminant;
  });
  return out;
}

std::vector<NumberFieldRecord> load_catalog_file(const std::string& path) {
  auto manifest = std::filesystem::path(path).parent_path() / "SHA256SUMS";
  verify_against_manifest(path, manifest.string());
  std::istringstream in(read_file(path));
  return load_catalog(in);
}

std::map<int, long> load_completeness(std::istream& source) {
  std::map<int, long> out;
  std::string raw;
  int line = 0;
  while (std::getline(source, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto cols = split(strip(raw), '|');
    if (cols.empty() || strip(cols[0]) != "complete") continue;
    if (cols.size() != 3) throw Error(Errc::MalformedCatalog, "line " + std::to_string(line) + ": expected complete|d|L");
    int d = static_cast<int>(parse_long(strip(cols[1]), "degree", line));
    long limit = parse_long(strip(cols[2]), "limit", line);
    if (!out.emplace(d, limit).second) {
      throw Error(Errc::MalformedCatalog, "line " + std::to_string(line) + ": repeated degree");
    }
  }
  return out;
}

std::map<int, long> load_completeness_file(const std::string& path) {
  auto manifest = std::filesystem::path(path).parent_path() / "SHA256SUMS";
  verify_against_manifest(path, manifest.string());
  std::istringstream in(read_file(path));
  return load_completeness(in);
}

std::vector<NumberFieldRecord> select(const std::vector<NumberFieldRecord>& catalog, int d,
                                      const Interval& bound) {
  std::vector<NumberFieldRecord> out;
  for (const auto& r : catalog) {
    if (r.degree == d && Rational(r.discriminant) < bound.hi()) out.push_back(r);
  }
  return out;
}

const NumberFieldRecord& find_field(const std::vector<NumberFieldRecord>& catalog, const std::string& label) {
  for (const auto& r : catalog) {
    if (r.label == label) return r;
  }
  throw Error(Errc::UnsupportedField, "no field labelled " + label);
}

const NumberFieldRecord& find_field(const std::vector<NumberFieldRecord>& catalog, int d, long D) {
  for (const auto& r : catalog) {
    if (r.degree == d && r.discriminant == D) return r;
  }
  throw Error(Errc::UnsupportedField, "no field with d=" + std::to_string(d) + ", D=" + std::to_string(D));
}

}  // namespace covcert::numberfields
