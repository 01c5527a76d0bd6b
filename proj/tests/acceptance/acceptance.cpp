// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include "nkflag/classification.hpp"
#include "nkflag/suites.hpp"
#include "nkflag/surfaces.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace nkflag;

namespace {

const std::array<Signature, 2> kSigs = {Signature::riemannian, Signature::pseudo};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const CheckReport* find(const std::vector<CheckReport>& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.name == name) return &r;
  return nullptr;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// Every named check must exist, pass, and stay under `bound`.
Outcome expect_checks(const std::vector<CheckReport>& reports, const std::vector<std::string>& names, double bound) {
  Outcome o;
  double worst = 0.0;
  for (auto sig : kSigs) {
    for (const auto& n : names) {
      const std::string full = std::string(to_string(sig)) + "/" + n;
      const auto* r = find(reports, full);
      if (!r) {
        o.require(false, full + " missing");
        continue;
      }
      worst = std::max(worst, r->max_abs_error);
      o.require(r->passed && r->max_abs_error < bound, full + " error " + fmt(r->max_abs_error));
    }
  }
  if (o.pass) o.detail = "max error " + fmt(worst);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const double r2 = 1 / std::sqrt(2.0), r3 = 1 / std::sqrt(3.0);
  const std::vector<std::pair<Amplitudes, double>> riem = {{{1, 0, 0}, 4}, {{r2, r2, 0}, 1}, {{r3, r3, r3}, 0}};
  const std::vector<std::pair<Amplitudes, double>> pseudo = {{{1, 0, 0}, 4}, {{0, 1, 0}, 4}, {{0, r2, r2}, 1}};
  for (auto sig : kSigs) {
    const auto& want = sig == Signature::riemannian ? riem : pseudo;
    std::vector<SolutionFamily> got;
    try {
      got = solve_families(sig);
    } catch (const std::exception& e) {
      o.require(false, e.what());
      continue;
    }
    o.require(got.size() == want.size(), std::string(to_string(sig)) + " family count " + std::to_string(got.size()));
    for (const auto& [amps, K] : want) {
      bool found = false;
      for (const auto& f : got) {
        double d = 0.0;
        for (std::size_t k = 0; k < 3; ++k) d = std::max(d, std::abs(f.amplitudes[k] - amps[k]));
        found = found || (d < 1e-10 && std::abs(f.K - K) < 1e-11);
      }
      o.require(found, std::string(to_string(sig)) + " missing family with K=" + fmt(K));
    }
    const auto scan = grid_scan(sig);
    o.require(scan.solutions.size() == want.size(), std::string(to_string(sig)) + " grid oracle found " +
                                                        std::to_string(scan.solutions.size()) + " families");
    if (sig == Signature::pseudo) {
      for (const auto& s : scan.solutions) {
        o.require(s[0] == 0.0 || s[1] == 0.0 || s[2] == 0.0, "pseudo grid found an all-nonzero solution");
      }
    }
  }
  if (o.pass) o.detail = "3 + 3 families, grid oracle agrees";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::ostringstream summary;
  for (int id = 1; id <= 6; ++id) {
    const auto& d = surface(id);
    const auto run = run_surface(d);
    for (const auto& r : summary_reports(d, run.summary)) {
      o.require(r.passed, r.name + " error " + fmt(r.max_abs_error) + " > " + fmt(r.tolerance));
    }
    summary << (id > 1 ? ", " : "") << "K" << id << "=" << std::to_string(run.summary.K_mean).substr(0, 6);
  }
  if (o.pass) o.detail = summary.str();
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto control = control_surface();

  const auto amps = plane_amplitudes(control, 0.0, 0.0);
  const auto mn = rank_one_minors(amps[0], amps[1], amps[2], control.sig);
  const double minor = std::max({std::abs(mn[0]), std::abs(mn[1]), std::abs(mn[2])});
  o.require(minor > 1e-2, "control minor residual " + fmt(minor));

  GridSpec grid;
  grid.n_t = 21;
  grid.n_u = 8;
  const auto run = run_surface(control, grid);
  o.require(run.summary.max_tg_residual > 1e-2, "control tg residual " + fmt(run.summary.max_tg_residual));

  SuiteOptions corrupt;
  corrupt.variant = BasisVariant::flipped_m2;
  bool all_fail = true;
  for (auto sig : kSigs) {
    const auto reports = curvature_suite(sig, corrupt);
    const auto* r = find(reports, "curvature.bracket_vs_tensorial_basis");
    all_fail = all_fail && r && !r->passed;
  }
  o.require(all_fail, "flipped-m2 basis still passes the curvature cross-check");
  if (o.pass) {
    o.detail = "minor " + fmt(minor) + ", tg " + fmt(run.summary.max_tg_residual) + ", flipped basis rejected";
  }
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = verify_all(kSigs);

  std::vector<std::pair<std::string, Outcome>> results;
  results.emplace_back("1 curvature bracket formula == tensorial formula (216 basis triples)",
                       expect_checks(reports, {"curvature.bracket_vs_tensorial_basis"}, 1e-12));
  results.emplace_back("2 connection table (24 entries) and vanishing of the rest",
                       expect_checks(reports, {"connection.tabulated_entries", "connection.untabulated_vanish"}, 1e-13));
  {
    auto a = expect_checks(reports, {"G.skew_on_basis", "G.vanishes_on_diagonal"}, 1e-12);
    const auto b = expect_checks(reports, {"G.m1_m2_equals_m6"}, 1e-13);
    a.require(b.pass, b.detail);
    results.emplace_back("3 nearly Kahler: G skew, G(X,X)=0, G(m1,m2)=m6", a);
  }
  {
    auto a = expect_checks(reports,
                           {"acs.square_minus_identity", "acs.pairwise_commute", "acs.J_is_minus_sum",
                            "acs.J_is_minus_product", "acs.distribution_relations", "acs.metric_family_compatible",
                            "G.J1_compatibility", "G.J2_compatibility", "G.J3_compatibility",
                            "G.three_structure_sum", "nabla_J1.closed_form", "nabla_J2.closed_form",
                            "nabla_J3.closed_form"},
                           1e-12);
    const auto b = expect_checks(reports, {"G.constant_type_alpha_1"}, 1e-9);
    a.require(b.pass, b.detail);
    results.emplace_back("4 identity suite and constant type alpha = 1", a);
  }
  results.emplace_back("5 classification tables, grid oracle", criterion5());
  results.emplace_back("6 example surfaces 1-6", criterion6());
  results.emplace_back("7 negative controls", criterion7());
  results.emplace_back("8 Jacobi, Bianchi, pair symmetry, Ad-invariance",
                       expect_checks(reports,
                                     {"bracket.jacobi", "curvature.first_bianchi", "curvature.pair_symmetry",
                                      "ad_isotropy.metric_invariance"},
                                     1e-11));

  bool ok = true;
  for (const auto& [name, outcome] : results) {
    std::printf("%s  %s  [%s]\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
    ok = ok && outcome.pass;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s (%.1f s)\n", ok ? "all acceptance criteria pass" : "acceptance FAILED", secs);
  return ok ? 0 : 1;
}
