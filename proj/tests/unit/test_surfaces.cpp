#include "nkflag/surfaces.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace nkflag;

namespace {

// dt^2 + G(t) du^2 with sqrt(G) = 1 + t^2 has K = -(sqrt G)'' / sqrt G.
Eigen::Matrix2d warped(double t, double, double sign) {
  Eigen::Matrix2d g;
  g << sign, 0.0, 0.0, sign * std::pow(1 + t * t, 2);
  return g;
}

double warped_K(double t) { return -2.0 / (1 + t * t); }

}  // namespace

TEST_CASE("Gauss curvature: warped product oracle") {
  for (double t : {-1.0, 0.0, 0.5, 2.0}) {
    CHECK(std::abs(gauss_curvature_fd([](double a, double b) { return warped(a, b, 1.0); }, t, 0.3) - warped_K(t)) <
          1e-6);
  }
}

TEST_CASE("Gauss curvature: negative definite metric flips the sign") {
  for (double t : {0.0, 0.7}) {
    CHECK(std::abs(gauss_curvature_fd([](double a, double b) { return warped(a, b, -1.0); }, t, 0.0) +
                   warped_K(t)) < 1e-6);
  }
}

TEST_CASE("Gauss curvature: invariant under a sheared reparametrisation") {
  // (t, u) -> (t + 0.4 u, u) introduces F != 0.
  Eigen::Matrix2d jac;
  jac << 1.0, 0.4, 0.0, 1.0;
  auto sheared = [&](double t, double u) {
    return Eigen::Matrix2d(jac.transpose() * warped(t + 0.4 * u, u, 1.0) * jac);
  };
  CHECK(std::abs(sheared(0.3, 0.5)(0, 1)) > 0.1);
  CHECK(std::abs(gauss_curvature_fd(sheared, 0.3, 0.5) - warped_K(0.5)) < 1e-6);
}

TEST_CASE("Gauss curvature: round sphere") {
  auto sphere = [](double t, double) {
    Eigen::Matrix2d g;
    g << 1.0, 0.0, 0.0, std::pow(std::sin(t), 2);
    return g;
  };
  CHECK(std::abs(gauss_curvature_fd(sphere, 1.0, 0.0) - 1.0) < 1e-6);
  CHECK_THROWS_AS(gauss_curvature_fd(sphere, 0.0, 0.0), std::domain_error);
}

TEST_CASE("surface ids outside 1..6 are rejected") {
  CHECK_THROWS_AS(surface(0), std::out_of_range);
  CHECK_THROWS_AS(surface(7), std::out_of_range);
  CHECK(surface(4).sig == Signature::pseudo);
}

TEST_CASE("closed forms start at the identity and stay in the group") {
  for (int id = 1; id <= 6; ++id) {
    const auto& d = surface(id);
    const double u0 = d.kind == GeneratorKind::polar ? 1.1 : 0.0;  // linear: F(0, u) = exp(u Q)
    CHECK(max_abs(ComplexMatrix3d(evaluate(d, 0.0, u0) - ComplexMatrix3d::Identity())) < 1e-15);
    const auto f = evaluate(d, 0.8, 2.3);
    const auto mt = twist<double>(d.sig);
    CHECK(max_abs(ComplexMatrix3d(f.adjoint() * mt * f - mt)) < 1e-13);
    CHECK(max_abs(ComplexMatrix3d(group_inverse(f, d.sig) * f - ComplexMatrix3d::Identity())) < 1e-13);
  }
}

TEST_CASE("the three frame routes agree") {
  for (int id = 1; id <= 6; ++id) {
    const auto& d = surface(id);
    for (double t : {0.3, 1.2}) {
      const auto a = frame(d, t, 0.7, FrameMethod::closed_form);
      const auto b = frame(d, t, 0.7, FrameMethod::frechet);
      const auto c = frame(d, t, 0.7, FrameMethod::finite_difference);
      CHECK(max_abs(AlgebraVectord(a.omega_u - b.omega_u)) < 1e-12);
      CHECK(max_abs(AlgebraVectord(a.omega_u - c.omega_u)) < 1e-6);
      CHECK(max_abs(a.omega_t_v) < 1e-12);
    }
  }
}

TEST_CASE("induced metrics: sphere of curvature 1 and a negative definite example") {
  const auto g2 = induced_metric(surface(2), 0.9, 0.4);
  CHECK(std::abs(g2.E - 1) < 1e-14);
  CHECK(std::abs(g2.G - std::pow(std::sin(0.9), 2)) < 1e-14);
  for (double t : {0.1, 1.0, 1.9}) {
    const auto g5 = induced_metric(surface(5), t, 0.2);
    CHECK(g5.E < 0);
    CHECK(g5.G <= 0);
  }
}

TEST_CASE("almost complex factor at t = 0 is 0 for polar examples") {
  const auto r = almost_complex_check(surface(1), 0.0, 0.5);
  CHECK(r.residual == 0.0);
  CHECK(r.factor == 0.0);
  const auto mid = almost_complex_check(surface(2), 1.0, 0.5);
  CHECK(std::abs(mid.factor - std::sin(1.0)) < 1e-13);
  CHECK(mid.carried == std::array<bool, 3>{true, true, false});
}

TEST_CASE("control plane is almost complex at o but not totally geodesic") {
  const auto c = control_surface();
  const auto amps = plane_amplitudes(c, 0.3, 0.0);
  const auto mn = rank_one_minors(amps[0], amps[1], amps[2], c.sig);
  CHECK(std::max({std::abs(mn[0]), std::abs(mn[1]), std::abs(mn[2])}) > 1e-2);
  double worst = 0.0;
  for (double t : {0.5, 1.0, 1.5}) worst = std::max(worst, std::abs(totally_geodesic_residual(c, t, 0.3)));
  CHECK(worst > 1e-2);
}

TEST_CASE("CSV layout and degenerate points") {
  GridSpec g;
  g.n_t = 3;
  g.n_u = 2;
  g.t_min = 0.5;
  g.t_max = std::numbers::pi / 2;  // degenerate for the first example
  const auto run = run_surface(surface(1), g);
  CHECK(run.summary.degenerate == 2);
  std::ostringstream os;
  write_csv(os, 1, run.samples);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "id,t,u,E,F,G,K,tg_residual,ac_residual");
  int rows = 0, empty_k = 0;
  while (std::getline(is, line)) {
    ++rows;
    if (line.find(",,") != std::string::npos) ++empty_k;
  }
  CHECK(rows == 6);
  CHECK(empty_k == 2);
}
