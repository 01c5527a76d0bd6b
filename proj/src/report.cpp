#include "nkflag/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace nkflag {

CheckReport make_report(std::string name, double max_abs_error, std::int64_t samples,
                        double tolerance, std::string note) {
  CheckReport r;
  r.name = std::move(name);
  r.max_abs_error = max_abs_error;
  r.samples = samples;
  r.tolerance = tolerance;
  r.passed = !std::isnan(max_abs_error) && max_abs_error <= tolerance;
  r.note = std::move(note);
  return r;
}

void CheckAccumulator::add(double error) {
  ++samples_;
  if (std::isnan(error)) {
    saw_nan_ = true;
    return;
  }
  max_error_ = std::max(max_error_, std::abs(error));
}

CheckReport CheckAccumulator::finish() const {
  const double err = saw_nan_ ? std::nan("") : max_error_;
  return make_report(name_, err, samples_, tolerance_, note_);
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

void to_json(nlohmann::json& j, const CheckReport& r) {
  j = nlohmann::json{{"name", r.name},
                     {"status", r.passed ? "pass" : "fail"},
                     {"max_abs_error", std::isnan(r.max_abs_error) ? nlohmann::json(nullptr)
                                                                   : nlohmann::json(r.max_abs_error)},
                     {"samples", r.samples},
                     {"tolerance", r.tolerance}};
  if (!r.note.empty()) j["note"] = r.note;
}

void from_json(const nlohmann::json& j, CheckReport& r) {
  r.name = j.at("name").get<std::string>();
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::runtime_error("bad status: " + status);
  r.passed = status == "pass";
  const auto& err = j.at("max_abs_error");
  r.max_abs_error = err.is_null() ? std::nan("") : err.get<double>();
  r.samples = j.at("samples").get<std::int64_t>();
  r.tolerance = j.at("tolerance").get<double>();
  r.note = j.value("note", std::string{});
}

nlohmann::json report_document(const std::string& command, const std::vector<CheckReport>& reports) {
  return nlohmann::json{{"schema_version", kReportSchemaVersion}, {"command", command}, {"checks", reports}};
}

std::vector<CheckReport> parse_report_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::runtime_error("report must be a JSON object");
  if (doc.value("schema_version", -1) != kReportSchemaVersion) {
    throw std::runtime_error("unsupported schema_version");
  }
  if (!doc.contains("checks") || !doc["checks"].is_array()) throw std::runtime_error("checks must be an array");
  std::vector<CheckReport> reports;
  try {
    reports = doc["checks"].get<std::vector<CheckReport>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed check entry: ") + e.what());
  }
  for (const auto& r : reports) {
    const bool expected = !std::isnan(r.max_abs_error) && r.max_abs_error <= r.tolerance;
    if (expected != r.passed) throw std::runtime_error("status inconsistent with tolerance: " + r.name);
  }
  return reports;
}

void print_table(std::ostream& os, const std::vector<CheckReport>& reports) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  const auto flags = os.flags();
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  status  "
     << std::setw(12) << "max_error" << "  " << std::setw(10) << "tolerance" << "  samples\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
       << std::setw(6) << (r.passed ? "pass" : "FAIL") << "  " << std::scientific << std::setprecision(3)
       << std::setw(12) << r.max_abs_error << "  " << std::setw(10) << r.tolerance << "  "
       << r.samples;
    if (!r.note.empty()) os << "  # " << r.note;
    os << '\n';
  }
  os.flags(flags);
}

}  // namespace nkflag
