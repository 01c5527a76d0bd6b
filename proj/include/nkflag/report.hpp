#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace nkflag {

inline constexpr int kReportSchemaVersion = 1;

/// Outcome of one named numerical check. `passed` is true iff the largest
/// observed error is within tolerance (NaN never passes).
struct CheckReport {
  std::string name;
  bool passed = false;
  double max_abs_error = 0.0;
  std::int64_t samples = 0;
  double tolerance = 0.0;
  std::string note;
};

CheckReport make_report(std::string name, double max_abs_error, std::int64_t samples,
                        double tolerance, std::string note = {});

/// Running max-error accumulator for building a CheckReport.
class CheckAccumulator {
 public:
  CheckAccumulator(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  void add(double error);
  void set_note(std::string note) { note_ = std::move(note); }
  double max_error() const { return max_error_; }
  std::int64_t samples() const { return samples_; }
  CheckReport finish() const;

 private:
  std::string name_;
  double tolerance_;
  double max_error_ = 0.0;
  bool saw_nan_ = false;
  std::int64_t samples_ = 0;
  std::string note_;
};

bool all_passed(const std::vector<CheckReport>& reports);

void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);

/// {"schema_version": 1, "command": ..., "checks": [...]}
nlohmann::json report_document(const std::string& command, const std::vector<CheckReport>& reports);

/// Validates the document layout and the pass/tolerance invariant of every
/// entry; throws std::runtime_error on the first violation.
std::vector<CheckReport> parse_report_document(const nlohmann::json& doc);

/// Plain aligned table, one line per check.
void print_table(std::ostream& os, const std::vector<CheckReport>& reports);

}  // namespace nkflag
