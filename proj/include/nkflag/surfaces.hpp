#pragma once

#include "nkflag/classification.hpp"
#include "nkflag/report.hpp"
#include "nkflag/tolerances.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nkflag {

struct MetricCoefficients {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
};

using MatrixField = std::function<ComplexMatrix3d(double, double)>;

/// How the exponent depends on (t, u): polar is t (cos u P + sin u Q),
/// linear is t P + u Q.
enum class GeneratorKind { polar, linear };

/// One of the example immersions (t, u) -> pi(F(t, u)), F = exp(generator).
struct SurfaceDescriptor {
  int id = 0;
  Signature sig = Signature::riemannian;
  std::string name;
  GeneratorKind kind = GeneratorKind::polar;
  AlgebraVectord P = AlgebraVectord::Zero();
  AlgebraVectord Q = AlgebraVectord::Zero();
  bool hyperbolic = false;

  /// Closed-form F(t, u); empty for the control surface.
  MatrixField closed_form;
  /// Closed-form left-translated derivatives F^-1 dF/dt and F^-1 dF/du.
  MatrixField omega_t_closed;
  MatrixField omega_u_closed;

  std::function<MetricCoefficients(double t)> expected_metric;
  std::optional<double> expected_K;
  std::optional<Amplitudes> expected_amplitudes;

  double t_min = 0.05;
  double t_max = 3.091592653589793;
};

/// The six examples, ids 1..6. Throws std::out_of_range otherwise.
const SurfaceDescriptor& surface(int id);

/// exp(t (cos u X + sin u JX)) with X = cos(s) m1 + sin(s) m2: an almost
/// complex plane at o that violates the rank-one condition for generic s.
SurfaceDescriptor control_surface(double s = 0.4);

AlgebraVectord generator(const SurfaceDescriptor& d, double t, double u);
AlgebraVectord generator_dt(const SurfaceDescriptor& d, double t, double u);
AlgebraVectord generator_du(const SurfaceDescriptor& d, double t, double u);

/// Closed form where available, else expm of the generator.
ComplexMatrix3d evaluate(const SurfaceDescriptor& d, double t, double u);
ComplexMatrix3d evaluate_expm(const SurfaceDescriptor& d, double t, double u);

/// Inverse in SU(3) / SU(2,1): M F^H M.
ComplexMatrix3d group_inverse(const ComplexMatrix3d& f, Signature sig);

enum class FrameMethod {
  automatic,          // closed form if displayed, else frechet
  closed_form,        // displayed F^-1 dF
  frechet,            // derivative of expm via the block exponential
  finite_difference,  // central differences of evaluate()
};

struct FrameSample {
  double t = 0.0;
  double u = 0.0;
  AlgebraVectord omega_t;
  AlgebraVectord omega_u;
  TangentVectord omega_t_h;
  TangentVectord omega_u_h;
  AlgebraVectord omega_t_v;
  AlgebraVectord omega_u_v;
};

FrameSample frame(const SurfaceDescriptor& d, double t, double u, FrameMethod method = FrameMethod::automatic,
                  double h = tol::kFdStep);

struct AlmostComplexResult {
  double residual = 0.0;  // min_f |omega_u_h - f J omega_t_h|
  double factor = 0.0;    // the minimising f
  std::array<bool, 3> carried{};  // distributions meeting the plane
};

AlmostComplexResult almost_complex_check(const SurfaceDescriptor& d, double t, double u);

MetricCoefficients induced_metric(const SurfaceDescriptor& d, double t, double u);

/// Gauss curvature of a 2x2 metric field from central-difference
/// Christoffel symbols, K = R_1212 / det g; valid for definite metrics of
/// either sign. Throws std::domain_error if |det g| is below the
/// degeneracy threshold.
double gauss_curvature_fd(const std::function<Eigen::Matrix2d(double, double)>& metric, double t, double u,
                          double h = tol::kCurvatureFdStep);

double gauss_curvature(const SurfaceDescriptor& d, double t, double u, double h = tol::kCurvatureFdStep);

/// Unit (|<X,X>| = 1) horizontal tangent vector along d/dt, at o.
TangentVectord unit_horizontal_frame(const SurfaceDescriptor& d, double t, double u);

/// gauss_curvature - holomorphic_K(X). Zero exactly when the second
/// fundamental form vanishes for an almost complex surface.
double totally_geodesic_residual(const SurfaceDescriptor& d, double t, double u, double h = tol::kCurvatureFdStep);

Amplitudes plane_amplitudes(const SurfaceDescriptor& d, double t, double u);

struct GridSpec {
  int n_t = 41;
  int n_u = 41;
  std::optional<double> t_min;  // defaults from the descriptor
  std::optional<double> t_max;
};

struct SurfaceSample {
  double t = 0.0;
  double u = 0.0;
  MetricCoefficients metric;
  bool degenerate = false;
  double K = 0.0;
  double tg_residual = 0.0;
  double ac_residual = 0.0;
};

struct SurfaceSummary {
  int id = 0;
  std::size_t samples = 0;
  std::size_t degenerate = 0;
  double max_expm_error = 0.0;
  double max_group_error = 0.0;
  double max_metric_error = 0.0;
  double K_mean = 0.0;
  double K_max_deviation = 0.0;
  double max_tg_residual = 0.0;
  double max_ac_residual = 0.0;
  double max_horizontality = 0.0;
  double max_amplitude_deviation = 0.0;
  double max_frame_fd_error = 0.0;
  double max_frame_route_error = 0.0;
};

struct SurfaceRun {
  SurfaceSummary summary;
  std::vector<SurfaceSample> samples;
};

struct SurfaceTolerances {
  double closed_form = tol::kClosedForm;
  double curvature = tol::kCurvatureFd;
  double exact = tol::kExact;
  double frame_fd = tol::kFrameFd;
};

SurfaceRun run_surface(const SurfaceDescriptor& d, const GridSpec& grid = {});

/// One CheckReport per property the summary certifies.
std::vector<CheckReport> summary_reports(const SurfaceDescriptor& d, const SurfaceSummary& s,
                                         const SurfaceTolerances& tols = {});

/// id,t,u,E,F,G,K,tg_residual,ac_residual; degenerate points leave K and
/// tg_residual empty.
void write_csv(std::ostream& os, int id, const std::vector<SurfaceSample>& samples);
nlohmann::json samples_json(int id, const SurfaceRun& run, const std::vector<CheckReport>& checks);

}  // namespace nkflag
