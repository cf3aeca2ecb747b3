#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "covcert/rigor/comparison.hpp"

namespace covcert::certifier {

using rigor::Interval;
using rigor::Rational;

enum class Verdict { Proved, Failed, Axiom, Tie };
std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view name);

struct NamedInterval {
  std::string name;
  Interval value;
};

struct Step {
  std::string id;
  std::string claim;
  std::string anchor;                        // which argument the step carries out
  std::vector<NamedInterval> enclosures;     // recorded for the reader
  std::vector<rigor::Comparison> comparisons;
  std::vector<std::string> dependencies;
  std::string exact;                         // exact rational when the step pins one down
  long precision_bits = 0;
  Verdict verdict = Verdict::Failed;
};

/// Ids of the five axiom steps. A1 only enters at rank 2.
inline constexpr std::string_view kAxiomIds[] = {"A1_quaternion_parity", "A2_identification", "A3_odlyzko_table",
                                                 "A4_index_bound", "A5_existence"};
bool is_axiom_id(std::string_view id);

inline const std::string kConclusion = "Sp_{2n}(Z) uniquely minimal (mod axioms A1–A5)";
inline const std::string kNotProved = "not proved";

struct DataDigest {
  std::string file;
  std::string sha256;
};

struct Certificate {
  int rank = 0;
  long precision_bits = 0;
  std::vector<DataDigest> data;
  std::vector<Step> steps;
  std::vector<std::string> surviving_fields_after_global;
  std::vector<std::string> surviving_fields_after_local;
  std::string final_conclusion;

  /// Failed if any step failed, else Tie if any step is undecided, else Proved.
  Verdict status() const;
  const Step* find(std::string_view id) const;
};

/// The verdict a step must carry given its own comparisons and the verdicts of
/// its dependencies: a step is never better than what it rests on.
Verdict derive_verdict(const std::vector<rigor::Comparison>& comparisons, const std::vector<Verdict>& dependencies);

struct Config {
  long precision_bits = 256;
  unsigned threads = 0;      // optimizer workers, 0 = hardware concurrency
  std::string fields_path;   // empty: <data dir>/fields.txt
  std::string odlyzko_path;  // empty: <data dir>/odlyzko.csv
};

/// COVCERT_DATA_DIR if set, else the data directory of the source tree.
std::string default_data_dir();

/// Runs the case analysis for rank n >= 2. Failed comparisons are recorded in
/// the certificate, not thrown; DataMissing and ChecksumMismatch are thrown.
Certificate run_case(int n, const Config& config = {});

/// Throws StepFailed naming the first failed or undecided step.
void require_proved(const Certificate& cert);

// ---------------------------------------------------------------- reports

inline constexpr std::string_view kSchema = "covcert-report/1";

enum class Format { Json, Text };

/// Deterministic: the same certificate always gives the same bytes.
std::string emit_report(const Certificate& cert, Format format);

struct VerifyResult {
  Verdict verdict = Verdict::Failed;
  int rank = 0;
  std::size_t steps = 0;
  std::size_t comparisons = 0;
};

/// Re-evaluates every recorded comparison from its recorded endpoints and
/// re-derives every verdict. SchemaMismatch for another schema or malformed
/// input, TamperDetected when anything recorded disagrees.
VerifyResult verify_report(std::istream& source);
VerifyResult verify_report_text(std::string_view json);

}  // namespace covcert::certifier
