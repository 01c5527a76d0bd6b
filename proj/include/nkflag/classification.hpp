#pragma once

#include "nkflag/nk_geometry.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace nkflag {

/// Shared immutable geometry for each signature.
const NearlyKahlerd& geometry(Signature sig);

using Amplitudes = std::array<double, 3>;

/// X = a Y + b Z + c W with Y in V1, Z in V2, W in V3 and
/// <Y,Y> = 1, <Z,Z> = <W,W> = epsilon.
struct TangentDecomposition {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  TangentVectord Y = unit_m<double>(1);
  TangentVectord Z = unit_m<double>(2);
  TangentVectord W = unit_m<double>(3);
  Signature sig = Signature::riemannian;

  TangentVectord X() const { return a * Y + b * Z + c * W; }
};

/// Unit vectors cos(p) m_k + sin(p) m_{k+3} with the given phases.
TangentDecomposition make_decomposition(double a, double b, double c, Signature sig, double phase_y = 0.0,
                                        double phase_z = 0.0, double phase_w = 0.0);

/// Splits a tangent vector into amplitudes and unit components. Components
/// with vanishing projection get amplitude 0 and the default unit vector.
TangentDecomposition decompose(const TangentVectord& x, Signature sig);

/// (J1 J X, J2 J X, J3 J X) from the sign pattern of the decomposition.
std::array<TangentVectord, 3> ji_on_JX(const TangentDecomposition& dec);

/// R(X,JX)JX = x X + y Y + z Z + w W.
struct CurvatureCoefficients {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;

  /// Total components along (Y, Z, W).
  Amplitudes along_frame(double a, double b, double c) const { return {x * a + y, x * b + z, x * c + w}; }
};

CurvatureCoefficients r_xjx_closed(double a, double b, double c, Signature sig);

/// The same expression realised as a tangent vector on a decomposition.
TangentVectord r_xjx_vector(const TangentDecomposition& dec);

/// <R(X,JX)JX, X> / <X,X>^2 from the closed form.
double closed_form_K(double a, double b, double c, Signature sig);

/// a(a^2 - e b^2) b,  a(a^2 - e c^2) c,  b(c^2 - b^2) c.
std::array<double, 3> minor_equations(double a, double b, double c, Signature sig);

/// The three 2x2 minors of [[P, Q, R], [a, b, c]] where (P, Q, R) are the
/// frame coefficients of the curvature. They equal
/// (6 * eq1, 6 * eq2, -6 * e * eq3).
std::array<double, 3> rank_one_minors(double a, double b, double c, Signature sig);

/// a, b, c >= 0, sorted descending inside each block of equally signed
/// distributions (all three for +1; V2, V3 for -1).
Amplitudes canonical_amplitudes(Amplitudes amps, Signature sig);

struct SolutionFamily {
  Amplitudes amplitudes{};
  double K = 0.0;
  /// +1 if the induced metric is positive definite, -1 if negative definite.
  int metric_sign = 1;
  std::string description;
};

/// Closed-form enumeration over the support patterns of (a, b, c).
std::vector<SolutionFamily> case_analysis(Signature sig);

struct GridScanResult {
  /// Canonical, deduplicated, normalised to <X,X> = +-1.
  std::vector<Amplitudes> solutions;
  std::size_t grid_points = 0;
  std::size_t candidates = 0;
  std::size_t null_rejected = 0;
  /// Worst residual norm among accepted solutions after refinement.
  double max_refined_residual = 0.0;
};

/// Independent oracle: dense scan of the positive octant of the unit sphere
/// (the equations are homogeneous), local refinement, canonicalisation.
GridScanResult grid_scan(Signature sig, double step = 1e-3);

/// Case analysis confirmed by the grid oracle. Throws std::runtime_error if
/// the two disagree.
std::vector<SolutionFamily> solve_families(Signature sig);

/// <R(X,JX)JX, X> / (<X,X> <JX,JX>). Throws std::domain_error for null X.
double holomorphic_K(const TangentVectord& x, Signature sig);

struct PhaseAlignment {
  double theta = 0.0;  // G(Y,Z) = cos(theta) W + sin(theta) JW
  double phi = 0.0;    // rotation X -> cos(phi) X + sin(phi) JX
  TangentVectord Y, Z, W;  // rotated frame
  double residual = 0.0;   // |G(Y~,Z~) - J W~|
};

/// Rotates (Y, Z, W) by a common phase so that G(Y, Z) = JW. The rotated
/// frame has phase theta - 3 phi, hence phi = (theta - pi/2) / 3.
PhaseAlignment phase_align(const TangentVectord& y, const TangentVectord& z, const TangentVectord& w,
                           Signature sig = Signature::riemannian);

}  // namespace nkflag
