// covcert: command-line front end for the certificate pipeline.
//
// Exit status: 0 proved, 1 usage or other error, 2 a step failed (or a report
// failed verification), 3 data missing, 4 tie unresolved at max precision.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "covcert/bounds.hpp"
#include "covcert/certifier.hpp"
#include "covcert/error.hpp"
#include "covcert/optimizer.hpp"

using namespace covcert;

namespace {

constexpr int kProved = 0;
constexpr int kOther = 1;
constexpr int kFailed = 2;
constexpr int kDataMissing = 3;
constexpr int kTie = 4;

int exit_for(certifier::Verdict v) {
  switch (v) {
    case certifier::Verdict::Proved:
    case certifier::Verdict::Axiom: return kProved;
    case certifier::Verdict::Tie: return kTie;
    case certifier::Verdict::Failed: return kFailed;
  }
  return kOther;
}

std::string data_path(const std::string& given, const char* name) {
  if (!given.empty()) return given;
  return (std::filesystem::path(certifier::default_data_dir()) / name).string();
}

std::string describe(const optimizer::SearchResult& r) {
  std::ostringstream out;
  out << "minimum " << rigor::to_decimal(r.best_value, 15) << "\n";
  out << "at (A, E) = " << bounds::to_string(r.best_pair);
  if (r.best_t) out << ", t = " << rigor::to_decimal(*r.best_t, 6);
  out << "\n";
  out << "rows " << r.rows_scanned << ", points " << r.points_scanned << ", feasible " << r.feasible_points
      << ", precision " << r.precision_bits << " bits\n";
  for (const auto& t : r.ties) {
    out << "tie with (A, E) = " << bounds::to_string(t.pair);
    if (t.t) out << ", t = " << rigor::to_decimal(*t.t, 6);
    out << ": " << rigor::to_decimal(t.value, 15) << "\n";
  }
  return out.str();
}

void field_report(const std::string& label, const std::string& op, int s, long p, const std::string& fields,
                  long bits) {
  auto catalog = numberfields::load_catalog_file(fields);
  const auto& f = numberfields::find_field(catalog, label);
  std::cout << f.label << ": degree " << f.degree << ", D = " << f.discriminant << ", h = " << f.class_number
            << "\n";
  if (op == "zeta") {
    std::cout << "zeta_K(" << s << ") = " << rigor::to_decimal(numberfields::dedekind_zeta_enclosure(f, s, bits), 20)
              << "\n";
  } else if (op == "units") {
    auto gens = numberfields::unit_generators(f);
    for (const auto& g : gens) {
      std::cout << "unit";
      for (const auto& c : g) std::cout << " " << rigor::to_string(c);
      std::cout << "  signs";
      for (int sign : numberfields::embedding_signs(f, g)) std::cout << (sign > 0 ? " +" : " -");
      std::cout << "\n";
    }
    try {
      std::cout << "[U+ : U^2] = " << numberfields::totally_positive_index(f) << "\n";
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedField) throw;
      std::cout << "[U+ : U^2] <= " << numberfields::totally_positive_index_upper(f) << "\n";
    }
  } else {
    std::vector<long> primes;
    if (p > 0) {
      primes.push_back(p);
    } else {
      for (long q = 2; q < 30; ++q) {
        if (numberfields::is_prime(q)) primes.push_back(q);
      }
    }
    for (long q : primes) {
      try {
        auto st = numberfields::splitting_type(f, q);
        std::cout << "p = " << q << ": " << numberfields::to_string(st.kind);
        for (const auto& pl : st.places) std::cout << "  (e=" << pl.e << ", f=" << pl.f << ", q=" << pl.q << ")";
        std::cout << "\n";
      } catch (const Error& e) {
        if (e.code() != Errc::UnsupportedArgument) throw;
        std::cout << "p = " << q << ": not determined (p divides the polynomial index)\n";
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified case analysis for minimal covolume lattices in Sp_2n(R)"};
  app.require_subcommand(1);

  int rank = 2;
  bool all = false;
  long precision = 256;
  unsigned threads = 0;
  std::string format = "json";
  std::string odlyzko;
  std::string fields;
  std::string output;
  auto* prove = app.add_subcommand("prove", "run the pipeline for one rank and print the report");
  prove->add_option("--n", rank, "rank n >= 2")->check(CLI::Range(2, 64));
  prove->add_flag("--all", all, "ranks 2 to 8");
  prove->add_option("--precision", precision, "working precision in bits")->check(CLI::Range(64L, 1L << 16));
  prove->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  prove->add_option("--odlyzko", odlyzko, "Odlyzko table (CSV)");
  prove->add_option("--fields", fields, "field catalog");
  prove->add_option("--threads", threads, "optimizer threads, 0 = all cores");
  prove->add_option("--output", output, "write the report here instead of stdout");

  std::string which = "n2";
  auto* optimize = app.add_subcommand("optimize", "run one parameter search");
  optimize->add_option("--case", which, "n2 or n3")->check(CLI::IsMember({"n2", "n3"}));
  optimize->add_option("--precision", precision, "working precision in bits")->check(CLI::Range(64L, 1L << 16));
  optimize->add_option("--odlyzko", odlyzko, "Odlyzko table (CSV)");
  optimize->add_option("--threads", threads, "threads, 0 = all cores");

  std::string report;
  auto* verify = app.add_subcommand("verify", "re-check a JSON report");
  verify->add_option("report", report, "report file")->required();

  std::string label;
  std::string op = "zeta";
  int s_arg = 2;
  long p_arg = 0;
  auto* field = app.add_subcommand("field", "inspect a catalog field");
  field->add_option("label", label, "catalog label, e.g. 2.2.5.1")->required();
  field->add_option("--op", op, "zeta, units or splitting")->check(CLI::IsMember({"zeta", "units", "splitting"}));
  field->add_option("--s", s_arg, "even argument for zeta");
  field->add_option("--p", p_arg, "single prime for splitting");
  field->add_option("--fields", fields, "field catalog");
  field->add_option("--precision", precision, "working precision in bits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*prove) {
      certifier::Config config{precision, threads, fields, odlyzko};
      auto fmt = format == "json" ? certifier::Format::Json : certifier::Format::Text;
      std::vector<int> ranks;
      if (all) {
        for (int n = 2; n <= 8; ++n) ranks.push_back(n);
      } else {
        ranks.push_back(rank);
      }
      std::string text;
      int code = kProved;
      if (all && fmt == certifier::Format::Json) text += "[\n";
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        auto cert = certifier::run_case(ranks[i], config);
        text += certifier::emit_report(cert, fmt);
        if (all && fmt == certifier::Format::Json && i + 1 < ranks.size()) text += ",\n";
        if (all && fmt == certifier::Format::Text && i + 1 < ranks.size()) text += "\n";
        code = std::max(code, exit_for(cert.status()));
      }
      if (all && fmt == certifier::Format::Json) text += "]\n";
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output, std::ios::binary) << text;
      }
      return code == kTie || code == kFailed ? code : kProved;
    }
    if (*optimize) {
      auto table = bounds::load_odlyzko_file(data_path(odlyzko, "odlyzko.csv"));
      optimizer::Options options{precision, threads};
      auto r = which == "n2" ? optimizer::optimize_n2(table, options) : optimizer::optimize_n3(table, options);
      std::cout << describe(r);
      return r.is_tie() ? kTie : kProved;
    }
    if (*verify) {
      std::ifstream in(report, std::ios::binary);
      if (!in) throw Error(Errc::DataMissing, "cannot open " + report);
      auto r = certifier::verify_report(in);
      std::cout << "rank " << r.rank << ": " << r.steps << " steps, " << r.comparisons << " comparisons re-checked, "
                << certifier::to_string(r.verdict) << "\n";
      return exit_for(r.verdict);
    }
    if (*field) {
      field_report(label, op, s_arg, p_arg, data_path(fields, "fields.txt"), precision);
      return kProved;
    }
  } catch (const Error& e) {
    std::cerr << "covcert: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::DataMissing: return kDataMissing;
      case Errc::StepFailed:
      case Errc::TamperDetected:
      case Errc::SchemaMismatch: return kFailed;
      default: return kOther;
    }
  } catch (const std::exception& e) {
    std::cerr << "covcert: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
