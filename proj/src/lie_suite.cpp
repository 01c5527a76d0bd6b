#include "nkflag/suites.hpp"

#include <cmath>
#include <numbers>

namespace nkflag {
namespace {

using Mat = ComplexMatrix3d;
using Vec = AlgebraVectord;

AlgebraVectord expected_gram_diagonal(Signature sig) {
  AlgebraVectord d = AlgebraVectord::Ones();
  if (sig == Signature::pseudo) {
    d(kM2) = d(kM3) = d(kM5) = d(kM6) = -1.0;
  }
  return d;
}

}  // namespace

std::vector<CheckReport> lie_structure_suite(Signature sig, const SuiteOptions& opts) {
  const LieAlgebrad g(sig, opts.variant);
  const Mat twist_m = twist<double>(sig);
  Sampler rng(opts.seed);
  std::vector<CheckReport> out;
  const int n = opts.random_samples;

  {
    CheckAccumulator acc("basis.in_algebra", tol::kStructure);
    for (const auto& x : g.basis()) {
      acc.add(max_abs(Mat(twist_m * x.adjoint() * twist_m + x)));
      acc.add(std::abs(trace(x)));
    }
    out.push_back(acc.finish());
  }
  {
    const Eigen::Matrix<double, 8, 8> expected = expected_gram_diagonal(sig).asDiagonal();
    out.push_back(make_report("basis.gram_matrix", max_abs(g.gram_matrix() - expected), 64, tol::kStructure));
  }
  {
    CheckAccumulator acc("coordinates.round_trip", 1e-14);
    for (int s = 0; s < n; ++s) {
      const Vec x = rng.algebra();
      acc.add(max_abs(g.coefficients(g.to_matrix(x)) - x));
    }
    out.push_back(acc.finish());
  }
  if (sig == Signature::riemannian) {
    CheckAccumulator acc("killing_form.twice_metric", tol::kStructure);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const Vec x = unit_algebra<double>(i), y = unit_algebra<double>(j);
        acc.add(g.killing(x, y) - 2.0 * g.metric(x, y));
        acc.add(g.killing(x, y) - g.killing(y, x));
      }
    out.push_back(acc.finish());
  }
  {
    // Evaluated on the matrices, independently of the cached constants.
    CheckAccumulator acc("bracket.jacobi", tol::kStructure);
    const auto& b = g.basis();
    for (const auto& x : b)
      for (const auto& y : b)
        for (const auto& z : b) {
          const Mat j = commutator(commutator(x, y), z) + commutator(commutator(y, z), x) +
                        commutator(commutator(z, x), y);
          acc.add(max_abs(j));
        }
    out.push_back(acc.finish());
  }
  {
    CheckAccumulator acc("bracket.structure_constants", tol::kStructure);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) acc.add(g.structure_constant(i, j, k) + g.structure_constant(j, i, k));
    for (int s = 0; s < n; ++s) {
      const Vec x = rng.algebra(), y = rng.algebra();
      acc.add(max_abs(g.bracket(x, y) - g.coefficients(commutator(g.to_matrix(x), g.to_matrix(y)))));
    }
    out.push_back(acc.finish());
  }
  {
    // [h, h] = 0 and [h, V_k] lies in V_k.
    CheckAccumulator acc("reductive.isotropy_brackets", tol::kStructure);
    acc.add(max_abs(g.bracket(unit_algebra<double>(kH1), unit_algebra<double>(kH2))));
    for (int hi : {kH1, kH2}) {
      for (int k = 1; k <= 6; ++k) {
        const Vec r = g.bracket(unit_algebra<double>(hi), embed(unit_m<double>(k)));
        const int dist = (k - 1) % 3 + 1;
        acc.add(max_abs(r - embed(project_distribution<double>(tangent_part(r), dist))));
      }
    }
    out.push_back(acc.finish());
  }
  {
    CheckAccumulator formula("ad_isotropy.m1_m4_formula", tol::kExact);
    CheckAccumulator invariant("ad_isotropy.metric_invariance", tol::kExact);
    CheckAccumulator preserves("ad_isotropy.preserves_distributions", tol::kExact);
    const double s3 = std::sqrt(3.0);
    for (int s = 0; s < n; ++s) {
      const double ps = rng.uniform(-std::numbers::pi, std::numbers::pi);
      const double pt = rng.uniform(-std::numbers::pi, std::numbers::pi);
      const double a = s3 * ps - pt;
      Vec e1 = Vec::Zero(), e4 = Vec::Zero();
      e1(kM1) = std::cos(a);
      e1(kM4) = -std::sin(a);
      e4(kM1) = std::sin(a);
      e4(kM4) = std::cos(a);
      formula.add(max_abs(g.ad_isotropy(ps, pt, unit_algebra<double>(kM1)) - e1));
      formula.add(max_abs(g.ad_isotropy(ps, pt, unit_algebra<double>(kM4)) - e4));

      const Vec x = rng.algebra(), y = rng.algebra();
      const Vec ax = g.ad_isotropy(ps, pt, x), ay = g.ad_isotropy(ps, pt, y);
      invariant.add(g.metric(ax, ay) - g.metric(x, y));

      const Vec ah = g.ad_isotropy(ps, pt, project_h(x));
      preserves.add(max_abs(ah - project_h(x)));
      for (int k = 1; k <= 3; ++k) {
        const Vec xk = embed(project_distribution<double>(tangent_part(x), k));
        const Vec axk = g.ad_isotropy(ps, pt, xk);
        preserves.add(max_abs(axk - embed(project_distribution<double>(tangent_part(axk), k))));
      }
    }
    out.push_back(formula.finish());
    out.push_back(invariant.finish());
    out.push_back(preserves.finish());
  }
  {
    CheckAccumulator acc("biinvariant.curvature_formula", tol::kExact);
    for (int s = 0; s < n; ++s) {
      const Vec x = rng.algebra(), y = rng.algebra(), z = rng.algebra();
      const Mat mx = g.to_matrix(x), my = g.to_matrix(y), mz = g.to_matrix(z);
      const Mat direct = 0.25 * commutator(mz, commutator(mx, my));
      acc.add(max_abs(g.biinvariant_curvature(x, y, z) - g.coefficients(direct)));
      acc.add(max_abs(g.biinvariant_curvature(x, x, z)));
    }
    out.push_back(acc.finish());
  }
  {
    CheckAccumulator member("expm.group_membership", tol::kExact);
    CheckAccumulator inverse("expm.inverse", tol::kExact);
    CheckAccumulator additive("expm.commuting_sum", tol::kExact);
    // su(2,1) contains non-compact directions where exp grows like e^|A|,
    // so the absolute targets are only meaningful on a smaller ball there.
    const double radius = sig == Signature::riemannian ? 10.0 : 2.0;
    for (int s = 0; s < n; ++s) {
      Mat a = g.to_matrix(rng.algebra());
      a *= radius / inf_norm(a) * std::abs(rng.uniform());
      const Mat e = expm(a);
      member.add(max_abs(Mat(e.adjoint() * twist_m * e - twist_m)));
      member.add(std::abs(det(e) - 1.0));
      inverse.add(inf_norm(Mat(e * expm(Mat(-a)) - Mat::Identity())));
      const double c = rng.uniform(0.0, 1.0);
      additive.add(max_abs(Mat(e - expm(Mat(c * a)) * expm(Mat((1.0 - c) * a)))));
    }
    out.push_back(member.finish());
    out.push_back(inverse.finish());
    out.push_back(additive.finish());
  }
  return out;
}

}  // namespace nkflag
