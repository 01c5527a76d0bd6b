#include "nkflag/report.hpp"

#include "doctest.h"

#include <cmath>
#include <limits>
#include <sstream>

using namespace nkflag;

TEST_CASE("status follows the error/tolerance comparison") {
  CHECK(make_report("a", 1e-13, 1, 1e-12).passed);
  CHECK(make_report("a", 1e-12, 1, 1e-12).passed);
  CHECK_FALSE(make_report("a", 2e-12, 1, 1e-12).passed);
  CHECK_FALSE(make_report("a", std::nan(""), 1, 1e-12).passed);
}

TEST_CASE("accumulator tracks the maximum and poisons on NaN") {
  CheckAccumulator acc("x", 1e-3);
  acc.add(1e-5);
  acc.add(-2e-4);
  acc.add(1e-6);
  auto r = acc.finish();
  CHECK(r.passed);
  CHECK(r.samples == 3);
  CHECK(r.max_abs_error == doctest::Approx(2e-4));
  acc.add(std::numeric_limits<double>::quiet_NaN());
  CHECK_FALSE(acc.finish().passed);
}

TEST_CASE("JSON round trip through the validating parser") {
  std::vector<CheckReport> in = {make_report("one", 1e-14, 10, 1e-12),
                                 make_report("two", 3.0, 5, 1e-12, "worst triple (m1,m4,m2)"),
                                 make_report("three", std::nan(""), 1, 1e-12)};
  const auto doc = report_document("verify", in);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["checks"][0]["status"] == "pass");
  CHECK(doc["checks"][1]["status"] == "fail");
  CHECK(doc["checks"][2]["max_abs_error"].is_null());

  const auto out = parse_report_document(nlohmann::json::parse(doc.dump()));
  REQUIRE(out.size() == 3);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(out[i].name == in[i].name);
    CHECK(out[i].passed == in[i].passed);
    CHECK(out[i].max_abs_error == in[i].max_abs_error);
    CHECK(out[i].samples == in[i].samples);
    CHECK(out[i].tolerance == in[i].tolerance);
    CHECK(out[i].note == in[i].note);
  }
  CHECK(std::isnan(out[2].max_abs_error));
  CHECK_FALSE(out[2].passed);
}

TEST_CASE("parser rejects malformed documents") {
  const auto good = report_document("verify", {make_report("one", 1e-14, 10, 1e-12)});

  auto bad_version = good;
  bad_version["schema_version"] = 2;
  CHECK_THROWS_AS(parse_report_document(bad_version), std::runtime_error);

  auto inconsistent = good;
  inconsistent["checks"][0]["max_abs_error"] = 1.0;
  CHECK_THROWS_AS(parse_report_document(inconsistent), std::runtime_error);

  auto bad_status = good;
  bad_status["checks"][0]["status"] = "maybe";
  CHECK_THROWS_AS(parse_report_document(bad_status), std::runtime_error);

  auto missing = good;
  missing["checks"][0].erase("tolerance");
  CHECK_THROWS_AS(parse_report_document(missing), std::runtime_error);

  CHECK_THROWS_AS(parse_report_document(nlohmann::json::array()), std::runtime_error);
}

TEST_CASE("table output has a header and one line per check") {
  std::ostringstream os;
  print_table(os, {make_report("one", 0, 1, 1), make_report("two", 2, 1, 1)});
  const auto s = os.str();
  CHECK(std::count(s.begin(), s.end(), '\n') == 3);
  CHECK(s.find("FAIL") != std::string::npos);
}
