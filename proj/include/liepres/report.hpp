#pragma once

#include <string>
#include <vector>

namespace liepres {

// Outcome of checking one catalog entry against a backend.
//
//   ExactPass             the stated identity holds on the nose.
//   RecoveredCoefficient  the left side lies in the span of the claimed
//                         right-hand words, and the solver pinned down (or
//                         parameterized) the coefficients; `recovered` holds
//                         the solution and `notes` how it compares to the
//                         stated one.
//   Fail                  the left side is not in the span of the claimed
//                         words at all; `notes` carries a residual norm.
enum class Outcome { ExactPass, RecoveredCoefficient, Fail };

const char* outcome_name(Outcome o);

struct EntryResult {
  std::string algebra;      // resolved key, e.g. "sl:6"
  std::string relation_id;  // "2.1", or a named check like "generation"
  Outcome outcome = Outcome::ExactPass;
  std::string recovered;  // empty unless the solver ran
  std::string notes;
  long long millis = 0;  // wall time for this entry; never part of text output
};

// Schema identifier stamped into every JSON report.
inline constexpr const char* kReportSchema = "liepres-report/1";

struct VerificationReport {
  std::string algebra;  // resolved key the suite ran against
  std::vector<EntryResult> entries;

  bool any(Outcome o) const;
  // 0 if everything passed exactly, 2 if something needed recovery, 1 if
  // anything failed outright.
  int exit_code() const;

  // Deterministic plain-text rendering; timings are deliberately excluded so
  // two runs over the same input are byte-identical.
  std::string render_text() const;
  // JSON rendering (includes per-entry millis, which vary run to run).
  std::string render_json() const;
};

}  // namespace liepres
