#include <filesystem>
#include <istream>
#include <sstream>

#include "covcert/bounds.hpp"
#include "covcert/digest.hpp"
#include "covcert/error.hpp"

namespace covcert::bounds {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_string(const OdlyzkoPair& p) {
  return "(" + rigor::to_decimal(p.A, 12) + ", " + rigor::to_decimal(p.E, 12) + ")";
}

std::vector<OdlyzkoPair> load_odlyzko(std::istream& source) {
  std::vector<OdlyzkoPair> rows;
  std::string line;
  bool header = false;
  int number = 0;
  while (std::getline(source, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw Error(Errc::MalformedCatalog, "odlyzko line " + std::to_string(number) + ": expected two columns");
    }
    std::string a = strip(line.substr(0, comma)), e = strip(line.substr(comma + 1));
    if (!header) {
      if (a != "A" || e != "E") throw Error(Errc::MalformedCatalog, "odlyzko table must start with the header A,E");
      header = true;
      continue;
    }
    OdlyzkoPair p;
    try {
      p = {rigor::parse_rational(a), rigor::parse_rational(e)};
    } catch (const Error&) {
      throw Error(Errc::MalformedCatalog, "odlyzko line " + std::to_string(number) + ": bad number");
    }
    if (p.A <= 1 || p.E <= 0) {
      throw Error(Errc::InvariantViolation, "odlyzko line " + std::to_string(number) + ": need A > 1 and E > 0");
    }
    rows.push_back(p);
  }
  if (rows.empty()) throw Error(Errc::EmptyTable, "odlyzko table has no rows");
  return rows;
}

std::vector<OdlyzkoPair> load_odlyzko_file(const std::string& path) {
  auto manifest = std::filesystem::path(path).parent_path() / "SHA256SUMS";
  verify_against_manifest(path, manifest.string());
  std::istringstream in(read_file(path));
  return load_odlyzko(in);
}

}  // namespace covcert::bounds
