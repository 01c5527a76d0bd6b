#include "nkflag/classification.hpp"
#include "nkflag/report.hpp"
#include "nkflag/suites.hpp"
#include "nkflag/surfaces.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

namespace {

using namespace nkflag;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<Signature> signatures(const std::string& s) {
  if (s == "riemannian") return {Signature::riemannian};
  if (s == "pseudo") return {Signature::pseudo};
  return {Signature::riemannian, Signature::pseudo};
}

bool write_file(const std::string& path, const std::string& body) {
  std::ofstream os(path);
  if (!os) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return false;
  }
  os << body;
  os.close();
  if (!os) {
    std::cerr << "error: failed writing " << path << "\n";
    return false;
  }
  return true;
}

struct Expected {
  Amplitudes amplitudes;
  double K;
};

// Totally geodesic almost complex surfaces, up to congruence.
const std::map<Signature, std::vector<Expected>>& expected_families() {
  static const double r2 = 1 / std::sqrt(2.0), r3 = 1 / std::sqrt(3.0);
  static const std::map<Signature, std::vector<Expected>> table = {
      {Signature::riemannian, {{{1, 0, 0}, 4}, {{r2, r2, 0}, 1}, {{r3, r3, r3}, 0}}},
      {Signature::pseudo, {{{1, 0, 0}, 4}, {{0, 1, 0}, 4}, {{0, r2, r2}, 1}}},
  };
  return table;
}

bool matches(const std::vector<SolutionFamily>& got, const std::vector<Expected>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    bool found = false;
    for (const auto& g : got) {
      double d = 0.0;
      for (std::size_t k = 0; k < 3; ++k) d = std::max(d, std::abs(g.amplitudes[k] - w.amplitudes[k]));
      if (d < tol::kClosedForm && std::abs(g.K - w.K) < tol::kProperty) found = true;
    }
    if (!found) return false;
  }
  return true;
}

int cmd_verify(const std::string& sig, std::uint64_t seed, double tol_exact, const std::string& out,
               bool corrupt) {
  SuiteOptions opts;
  opts.seed = seed;
  opts.tol_exact = tol_exact;
  if (corrupt) opts.variant = BasisVariant::flipped_m2;
  const auto sigs = signatures(sig);
  const auto reports = verify_all(sigs, opts);
  print_table(std::cout, reports);
  for (auto s : sigs) {
    const auto g = LieAlgebrad(s, opts.variant).gram_diagonal();
    std::cout << to_string(s) << " gram diagonal: (";
    for (int i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g(i);
    std::cout << ")\n";
  }
  const bool ok = all_passed(reports);
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (" << reports.size() << " checks)\n";
  if (!out.empty() && !write_file(out, report_document("verify", reports).dump(2) + "\n")) return kExitFail;
  return ok ? kExitPass : kExitFail;
}

int cmd_classify(const std::string& sig) {
  bool ok = true;
  std::cout << std::left << std::setw(12) << "signature" << std::setw(40) << "a, b, c" << std::setw(8) << "K"
            << "description\n";
  for (auto s : signatures(sig)) {
    std::vector<SolutionFamily> families;
    try {
      families = solve_families(s);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitFail;
    }
    for (const auto& f : families) {
      std::ostringstream amps;
      amps << std::fixed << std::setprecision(9) << f.amplitudes[0] << ", " << f.amplitudes[1] << ", "
           << f.amplitudes[2];
      std::ostringstream k;
      k << std::fixed << std::setprecision(3) << (std::abs(f.K) < 1e-12 ? 0.0 : f.K);
      std::cout << std::left << std::setw(12) << to_string(s) << std::setw(40) << amps.str() << std::setw(8)
                << k.str() << f.description << "\n";
    }
    if (!matches(families, expected_families().at(s))) {
      std::cerr << "error: " << to_string(s) << " families differ from the expected classification\n";
      ok = false;
    }
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_surface(int id, int grid, const std::string& out, const std::string& format, double tol_fd) {
  const auto& d = surface(id);
  GridSpec spec;
  spec.n_t = grid;
  spec.n_u = grid;
  const auto run = run_surface(d, spec);
  SurfaceTolerances tols;
  tols.curvature = tol_fd;
  const auto reports = summary_reports(d, run.summary, tols);
  const auto& s = run.summary;

  std::cout << "surface " << id << ": " << d.name << " (" << to_string(d.sig) << ")\n"
            << std::scientific << std::setprecision(3) << "  samples             " << s.samples << " ("
            << s.degenerate << " degenerate)\n"
            << "  max expm error      " << s.max_expm_error << "\n"
            << "  max metric error    " << s.max_metric_error << "\n"
            << "  K mean +- max dev   " << std::fixed << std::setprecision(6) << s.K_mean << " +- "
            << std::scientific << std::setprecision(3) << s.K_max_deviation << "\n"
            << "  max tg residual     " << s.max_tg_residual << "\n";
  std::cout.unsetf(std::ios::floatfield);
  print_table(std::cout, reports);

  if (!out.empty()) {
    std::ostringstream body;
    if (format == "json") {
      body << samples_json(id, run, reports).dump(2) << "\n";
    } else {
      write_csv(body, id, run.samples);
    }
    if (!write_file(out, body.str())) return kExitFail;
  }
  return all_passed(reports) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for the nearly Kahler flag manifold F(1,2) of C^3 and its SU(2,1) counterpart"};
  app.require_subcommand(1);

  std::string sig = "both";
  std::uint64_t seed = kDefaultSeed;
  double tol_exact = tol::kExact;
  double tol_fd = tol::kCurvatureFd;
  std::string out;
  std::string format = "csv";
  int id = 0;
  int grid = 41;
  bool corrupt = false;

  const auto add_signature = [&](CLI::App* cmd) {
    cmd->add_option("--signature", sig, "both, riemannian or pseudo")
        ->check(CLI::IsMember({"both", "riemannian", "pseudo"}))
        ->envname("NKFLAG_SIGNATURE")
        ->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Run the structural verification suites");
  add_signature(verify);
  verify->add_option("--seed", seed, "Random seed")->envname("NKFLAG_SEED")->capture_default_str();
  verify->add_option("--tol-exact", tol_exact, "Tolerance of exact identities")
      ->check(CLI::PositiveNumber)
      ->envname("NKFLAG_TOL_EXACT")
      ->capture_default_str();
  verify->add_option("--out", out, "JSON report path")->envname("NKFLAG_OUT");
  verify->add_flag("--corrupt-basis", corrupt, "Self-test: flip the sign of m2 (checks must fail)");

  auto* classify = app.add_subcommand("classify", "Print the totally geodesic almost complex surfaces");
  add_signature(classify);

  auto* surf = app.add_subcommand("surface", "Sample one of the example surfaces");
  surf->add_option("--id", id, "Example id")->required()->check(CLI::Range(1, 6));
  surf->add_option("--grid", grid, "Grid points per direction")
      ->check(CLI::Range(3, 2001))
      ->envname("NKFLAG_GRID")
      ->capture_default_str();
  surf->add_option("--out", out, "Sample output path")->envname("NKFLAG_OUT");
  surf->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("NKFLAG_FORMAT")
      ->capture_default_str();
  surf->add_option("--tol-fd", tol_fd, "Tolerance of finite-difference curvature checks")
      ->check(CLI::PositiveNumber)
      ->envname("NKFLAG_TOL_FD")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(sig, seed, tol_exact, out, corrupt);
    if (*classify) return cmd_classify(sig);
    if (*surf) return cmd_surface(id, grid, out, format, tol_fd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
