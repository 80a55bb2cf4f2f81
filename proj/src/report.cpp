#include "liepres/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace liepres {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::ExactPass:
      return "ExactPass";
    case Outcome::RecoveredCoefficient:
      return "RecoveredCoefficient";
    case Outcome::Fail:
      return "Fail";
  }
  return "?";
}

bool VerificationReport::any(Outcome o) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const EntryResult& e) { return e.outcome == o; });
}

int VerificationReport::exit_code() const {
  if (any(Outcome::Fail)) return 1;
  if (any(Outcome::RecoveredCoefficient)) return 2;
  return 0;
}

std::string VerificationReport::render_text() const {
  std::ostringstream out;
  out << "# " << kReportSchema << "\n";
  out << "algebra: " << algebra << "\n\n";
  size_t exact = 0, recovered = 0, failed = 0;
  for (const EntryResult& e : entries) {
    out << e.relation_id << ": " << outcome_name(e.outcome);
    if (e.algebra != algebra) out << "  [" << e.algebra << "]";
    out << "\n";
    if (!e.recovered.empty()) out << "  recovered: " << e.recovered << "\n";
    if (!e.notes.empty()) out << "  note: " << e.notes << "\n";
    switch (e.outcome) {
      case Outcome::ExactPass:
        ++exact;
        break;
      case Outcome::RecoveredCoefficient:
        ++recovered;
        break;
      case Outcome::Fail:
        ++failed;
        break;
    }
  }
  out << "\nsummary: " << entries.size() << " entries, " << exact << " exact, "
      << recovered << " recovered, " << failed << " failed\n";
  return out.str();
}

std::string VerificationReport::render_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["algebra"] = algebra;
  j["entries"] = nlohmann::ordered_json::array();
  for (const EntryResult& e : entries) {
    nlohmann::ordered_json je;
    je["algebra"] = e.algebra;
    je["relation_id"] = e.relation_id;
    je["outcome"] = outcome_name(e.outcome);
    je["recovered"] = e.recovered;
    je["notes"] = e.notes;
    je["millis"] = e.millis;
    j["entries"].push_back(je);
  }
  return j.dump(2) + "\n";
}

}  // namespace liepres
