#include "nkflag/surfaces.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace nkflag {
namespace {

using Mat = ComplexMatrix3d;
using Cx = std::complex<double>;
using Tan = TangentVectord;
using Vec = AlgebraVectord;

constexpr Cx kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

Cx cis(double x) { return std::exp(kI * x); }

Mat mat(std::initializer_list<std::initializer_list<Cx>> rows) {
  Mat m;
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vec combo(std::initializer_list<std::pair<int, double>> terms) {
  Vec v = Vec::Zero();
  for (const auto& [k, c] : terms) v(k) += c;
  return v;
}

// F1 and F4 share the same matrices: m1, m4 agree in both real forms.
Mat rotation_v1(double t, double u) {
  return mat({{std::cos(t), -cis(-u) * std::sin(t), 0.0}, {cis(u) * std::sin(t), std::cos(t), 0.0}, {0.0, 0.0, 1.0}});
}
Mat rotation_v1_dt(double, double u) { return mat({{0.0, -cis(-u), 0.0}, {cis(u), 0.0, 0.0}, {0.0, 0.0, 0.0}}); }
Mat rotation_v1_du(double t, double u) {
  const double s = std::sin(t), c = std::cos(t);
  return mat({{kI * s * s, s * c * kI * cis(-u), 0.0}, {kI * cis(u) * s * c, -kI * s * s, 0.0}, {0.0, 0.0, 0.0}});
}

std::array<SurfaceDescriptor, 6> build_examples() {
  std::array<SurfaceDescriptor, 6> s;
  const double pi = std::numbers::pi;

  {
    auto& d = s[0];
    d.id = 1;
    d.sig = Signature::riemannian;
    d.name = "V1 sphere, K=4";
    d.P = combo({{kM1, 1.0}});
    d.Q = combo({{kM4, 1.0}});
    d.closed_form = rotation_v1;
    d.omega_t_closed = rotation_v1_dt;
    d.omega_u_closed = rotation_v1_du;
    d.expected_metric = [](double t) { return MetricCoefficients{1.0, 0.0, std::pow(std::sin(2 * t) / 2, 2)}; };
    d.expected_K = 4.0;
    d.expected_amplitudes = Amplitudes{1.0, 0.0, 0.0};
  }
  {
    auto& d = s[1];
    d.id = 2;
    d.sig = Signature::riemannian;
    d.name = "V1+V2 sphere, K=1";
    d.P = combo({{kM1, 1 / kSqrt2}, {kM2, 1 / kSqrt2}});
    d.Q = combo({{kM4, 1 / kSqrt2}, {kM5, 1 / kSqrt2}});
    d.closed_form = [](double t, double u) {
      const double c2 = std::pow(std::cos(t / 2), 2), s2 = std::pow(std::sin(t / 2), 2);
      const double st = std::sin(t) / kSqrt2;
      return mat({{c2, -cis(-u) * st, cis(-2 * u) * s2},
                  {cis(u) * st, std::cos(t), -cis(-u) * st},
                  {cis(2 * u) * s2, cis(u) * st, c2}});
    };
    d.omega_t_closed = [](double, double u) {
      return mat({{0.0, -cis(-u) / kSqrt2, 0.0}, {cis(u) / kSqrt2, 0.0, -cis(-u) / kSqrt2}, {0.0, cis(u) / kSqrt2, 0.0}});
    };
    d.omega_u_closed = [](double t, double u) {
      const double st = std::sin(t) / kSqrt2, cm = std::cos(t) - 1.0;
      return mat({{-kI * cm, kI * cis(-u) * st, 0.0},
                  {kI * cis(u) * st, 0.0, kI * cis(-u) * st},
                  {0.0, kI * cis(u) * st, kI * cm}});
    };
    d.expected_metric = [](double t) { return MetricCoefficients{1.0, 0.0, std::pow(std::sin(t), 2)}; };
    d.expected_K = 1.0;
    d.expected_amplitudes = Amplitudes{1 / kSqrt2, 1 / kSqrt2, 0.0};
  }
  {
    auto& d = s[2];
    d.id = 3;
    d.sig = Signature::riemannian;
    d.name = "V1+V2+V3 flat torus, K=0";
    d.kind = GeneratorKind::linear;
    d.P = combo({{kM1, 1 / kSqrt3}, {kM2, 1 / kSqrt3}, {kM3, 1 / kSqrt3}});
    d.Q = combo({{kM4, 1 / kSqrt3}, {kM5, 1 / kSqrt3}, {kM6, -1 / kSqrt3}});
    d.closed_form = [](double t, double u) {
      const Cx p = std::exp(-2.0 * kI * u / kSqrt3) / 3.0;
      const Cx q = cis(kSqrt3 * u);
      const double c = std::cos(t), sn = std::sin(t);
      const Cx pre = std::exp(-kI * t - 2.0 * kI * u / kSqrt3) / 3.0;
      const Cx c11 = p * (1.0 + 2.0 * q * c);
      const Cx c12 = p * (-1.0 + q * (c - kSqrt3 * sn));
      const Cx c13 = pre * (-cis(t + kSqrt3 * u) * (kSqrt3 * sn + c) + kI * sn + c);
      const Cx c21 = p * (-1.0 + q * (kSqrt3 * sn + c));
      const Cx c31 = pre * (cis(t + kSqrt3 * u) * (kSqrt3 * sn - c) + kI * sn + c);
      return mat({{c11, c12, c13}, {c21, c11, c12}, {c31, c21, c11}});
    };
    d.omega_t_closed = [](double, double) {
      const double r = 1 / kSqrt3;
      return mat({{0.0, -r, -r}, {r, 0.0, -r}, {r, r, 0.0}});
    };
    d.omega_u_closed = [](double, double) {
      const Cx r = kI / kSqrt3;
      return mat({{0.0, r, -r}, {r, 0.0, r}, {-r, r, 0.0}});
    };
    d.expected_metric = [](double) { return MetricCoefficients{1.0, 0.0, 1.0}; };
    d.expected_K = 0.0;
    d.expected_amplitudes = Amplitudes{1 / kSqrt3, 1 / kSqrt3, 1 / kSqrt3};
  }
  {
    auto& d = s[3];
    d = s[0];
    d.id = 4;
    d.sig = Signature::pseudo;
    d.name = "V1 sphere in SU(2,1), K=4";
  }
  {
    auto& d = s[4];
    d.id = 5;
    d.sig = Signature::pseudo;
    d.name = "V2 anti-hyperbolic, K=4";
    d.hyperbolic = true;
    d.P = combo({{kM2, 1.0}});
    d.Q = combo({{kM5, 1.0}});
    d.closed_form = [](double t, double u) {
      return mat({{1.0, 0.0, 0.0},
                  {0.0, std::cosh(t), cis(-u) * std::sinh(t)},
                  {0.0, cis(u) * std::sinh(t), std::cosh(t)}});
    };
    d.omega_t_closed = [](double, double u) {
      return mat({{0.0, 0.0, 0.0}, {0.0, 0.0, cis(-u)}, {0.0, cis(u), 0.0}});
    };
    d.omega_u_closed = [](double t, double u) {
      const double sh = std::sinh(t), ch = std::cosh(t);
      return mat({{0.0, 0.0, 0.0},
                  {0.0, -kI * sh * sh, -kI * cis(-u) * sh * ch},
                  {0.0, kI * cis(u) * sh * ch, kI * sh * sh}});
    };
    d.expected_metric = [](double t) { return MetricCoefficients{-1.0, 0.0, -std::pow(std::sinh(2 * t) / 2, 2)}; };
    d.expected_K = 4.0;
    d.expected_amplitudes = Amplitudes{0.0, 1.0, 0.0};
  }
  {
    auto& d = s[5];
    d.id = 6;
    d.sig = Signature::pseudo;
    d.name = "V2+V3 anti-hyperbolic, K=1";
    d.hyperbolic = true;
    d.P = combo({{kM2, 1 / kSqrt2}, {kM3, 1 / kSqrt2}});
    d.Q = combo({{kM5, 1 / kSqrt2}, {kM6, -1 / kSqrt2}});
    d.closed_form = [](double t, double u) {
      const double c2 = std::pow(std::cosh(t / 2), 2), s2 = std::pow(std::sinh(t / 2), 2);
      const double st = std::sinh(t) / kSqrt2;
      return mat({{c2, cis(2 * u) * s2, cis(u) * st},
                  {cis(-2 * u) * s2, c2, cis(-u) * st},
                  {cis(-u) * st, cis(u) * st, std::cosh(t)}});
    };
    d.omega_t_closed = [](double, double u) {
      return mat({{0.0, 0.0, cis(u) / kSqrt2}, {0.0, 0.0, cis(-u) / kSqrt2}, {cis(-u) / kSqrt2, cis(u) / kSqrt2, 0.0}});
    };
    d.omega_u_closed = [](double t, double u) {
      const double st = std::sinh(t) / kSqrt2, cm = std::cosh(t) - 1.0;
      return mat({{kI * cm, 0.0, kI * cis(u) * st},
                  {0.0, -kI * cm, -kI * cis(-u) * st},
                  {-kI * cis(-u) * st, kI * cis(u) * st, 0.0}});
    };
    d.expected_metric = [](double t) { return MetricCoefficients{-1.0, 0.0, -std::pow(std::sinh(t), 2)}; };
    d.expected_K = 1.0;
    d.expected_amplitudes = Amplitudes{0.0, 1 / kSqrt2, 1 / kSqrt2};
  }
  for (auto& d : s) {
    d.t_min = 0.05;
    d.t_max = d.hyperbolic ? 2.0 : pi - 0.05;
  }
  return s;
}

Mat omega_matrix(const SurfaceDescriptor& d, const Mat& f, const Mat& df) { return group_inverse(f, d.sig) * df; }

Eigen::Matrix2d metric_matrix(const MetricCoefficients& m) {
  Eigen::Matrix2d g;
  g << m.E, m.F, m.F, m.G;
  return g;
}

}  // namespace

const SurfaceDescriptor& surface(int id) {
  static const std::array<SurfaceDescriptor, 6> examples = build_examples();
  if (id < 1 || id > 6) throw std::out_of_range("surface id must be in 1..6");
  return examples[static_cast<std::size_t>(id - 1)];
}

SurfaceDescriptor control_surface(double s) {
  SurfaceDescriptor d;
  d.id = 0;
  d.sig = Signature::riemannian;
  d.name = "control (non-solution plane)";
  d.P = combo({{kM1, std::cos(s)}, {kM2, std::sin(s)}});
  d.Q = embed(geometry(d.sig).J(tangent_part(d.P)));
  d.t_min = 0.05;
  d.t_max = std::numbers::pi - 0.05;
  return d;
}

AlgebraVectord generator(const SurfaceDescriptor& d, double t, double u) {
  if (d.kind == GeneratorKind::linear) return t * d.P + u * d.Q;
  return t * (std::cos(u) * d.P + std::sin(u) * d.Q);
}

AlgebraVectord generator_dt(const SurfaceDescriptor& d, double, double u) {
  if (d.kind == GeneratorKind::linear) return d.P;
  return std::cos(u) * d.P + std::sin(u) * d.Q;
}

AlgebraVectord generator_du(const SurfaceDescriptor& d, double t, double u) {
  if (d.kind == GeneratorKind::linear) return d.Q;
  return t * (-std::sin(u) * d.P + std::cos(u) * d.Q);
}

ComplexMatrix3d evaluate_expm(const SurfaceDescriptor& d, double t, double u) {
  return expm(geometry(d.sig).algebra().to_matrix(generator(d, t, u)));
}

ComplexMatrix3d evaluate(const SurfaceDescriptor& d, double t, double u) {
  return d.closed_form ? d.closed_form(t, u) : evaluate_expm(d, t, u);
}

ComplexMatrix3d group_inverse(const ComplexMatrix3d& f, Signature sig) {
  const Mat m = twist<double>(sig);
  return m * f.adjoint() * m;
}

FrameSample frame(const SurfaceDescriptor& d, double t, double u, FrameMethod method, double h) {
  const auto& alg = geometry(d.sig).algebra();
  if (method == FrameMethod::automatic) {
    method = d.omega_t_closed ? FrameMethod::closed_form : FrameMethod::frechet;
  }
  if (method == FrameMethod::closed_form && !d.omega_t_closed) {
    throw std::invalid_argument("surface has no closed-form frame");
  }

  Mat wt, wu;
  switch (method) {
    case FrameMethod::closed_form:
      wt = d.omega_t_closed(t, u);
      wu = d.omega_u_closed(t, u);
      break;
    case FrameMethod::frechet: {
      const Mat a = alg.to_matrix(generator(d, t, u));
      const Mat f = expm(a);
      wt = omega_matrix(d, f, expm_frechet(a, Mat(alg.to_matrix(generator_dt(d, t, u)))));
      wu = omega_matrix(d, f, expm_frechet(a, Mat(alg.to_matrix(generator_du(d, t, u)))));
      break;
    }
    case FrameMethod::finite_difference: {
      const Mat f = evaluate(d, t, u);
      const Mat dt = (evaluate(d, t + h, u) - evaluate(d, t - h, u)) / (2 * h);
      const Mat du = (evaluate(d, t, u + h) - evaluate(d, t, u - h)) / (2 * h);
      wt = omega_matrix(d, f, dt);
      wu = omega_matrix(d, f, du);
      break;
    }
    case FrameMethod::automatic:
      break;
  }

  FrameSample s;
  s.t = t;
  s.u = u;
  s.omega_t = alg.coefficients(wt);
  s.omega_u = alg.coefficients(wu);
  s.omega_t_h = tangent_part(s.omega_t);
  s.omega_u_h = tangent_part(s.omega_u);
  s.omega_t_v = project_h(s.omega_t);
  s.omega_u_v = project_h(s.omega_u);
  return s;
}

AlmostComplexResult almost_complex_check(const SurfaceDescriptor& d, double t, double u) {
  const auto s = frame(d, t, u);
  const Tan jt = geometry(d.sig).J(s.omega_t_h);
  AlmostComplexResult r;
  const double denom = jt.squaredNorm();
  r.factor = denom > 0.0 ? jt.dot(s.omega_u_h) / denom : 0.0;
  r.residual = (s.omega_u_h - r.factor * jt).norm();
  for (int k = 1; k <= 3; ++k) {
    const double amp = std::max(project_distribution<double>(s.omega_t_h, k).norm(),
                                project_distribution<double>(s.omega_u_h, k).norm());
    r.carried[static_cast<std::size_t>(k - 1)] = amp > tol::kAmplitude;
  }
  return r;
}

MetricCoefficients induced_metric(const SurfaceDescriptor& d, double t, double u) {
  const auto s = frame(d, t, u);
  const auto& nk = geometry(d.sig);
  return {nk.metric(s.omega_t_h, s.omega_t_h), nk.metric(s.omega_t_h, s.omega_u_h),
          nk.metric(s.omega_u_h, s.omega_u_h)};
}

double gauss_curvature_fd(const std::function<Eigen::Matrix2d(double, double)>& metric, double t, double u,
                          double h) {
  using M2 = Eigen::Matrix2d;
  // christoffel(p)[k](i, j) = Gamma^k_ij
  auto christoffel = [&](double pt, double pu) {
    const M2 g = metric(pt, pu);
    const std::array<M2, 2> dg = {(metric(pt + h, pu) - metric(pt - h, pu)) / (2 * h),
                                  (metric(pt, pu + h) - metric(pt, pu - h)) / (2 * h)};
    const M2 ginv = g.inverse();
    std::array<M2, 2> gamma;
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double v = 0.0;
          for (int m = 0; m < 2; ++m) {
            v += 0.5 * ginv(k, m) * (dg[static_cast<std::size_t>(i)](j, m) + dg[static_cast<std::size_t>(j)](i, m) -
                                     dg[static_cast<std::size_t>(m)](i, j));
          }
          gamma[static_cast<std::size_t>(k)](i, j) = v;
        }
    return gamma;
  };

  const M2 g = metric(t, u);
  if (std::abs(g.determinant()) < tol::kDegenerateMetric) {
    throw std::domain_error("gauss_curvature: degenerate induced metric");
  }
  const auto gamma = christoffel(t, u);
  const auto gtp = christoffel(t + h, u), gtm = christoffel(t - h, u);
  const auto gup = christoffel(t, u + h), gum = christoffel(t, u - h);
  // dgamma[l][k](i,j) = d_l Gamma^k_ij
  std::array<std::array<M2, 2>, 2> dgamma;
  for (std::size_t k = 0; k < 2; ++k) {
    dgamma[0][k] = (gtp[k] - gtm[k]) / (2 * h);
    dgamma[1][k] = (gup[k] - gum[k]) / (2 * h);
  }
  // R^r_{s m n} = d_m G^r_{n s} - d_n G^r_{m s} + G^r_{m l} G^l_{n s} - G^r_{n l} G^l_{m s}
  // with (s, m, n) = (1, 0, 1).
  Eigen::Vector2d riemann_up;
  for (std::size_t r = 0; r < 2; ++r) {
    double v = dgamma[0][r](1, 1) - dgamma[1][r](0, 1);
    for (std::size_t l = 0; l < 2; ++l) {
      const int li = static_cast<int>(l);
      v += gamma[r](0, li) * gamma[l](1, 1) - gamma[r](1, li) * gamma[l](0, 1);
    }
    riemann_up(static_cast<int>(r)) = v;
  }
  const double r0101 = g.row(0).dot(riemann_up);
  return r0101 / g.determinant();
}

double gauss_curvature(const SurfaceDescriptor& d, double t, double u, double h) {
  return gauss_curvature_fd([&](double pt, double pu) { return metric_matrix(induced_metric(d, pt, pu)); }, t, u, h);
}

TangentVectord unit_horizontal_frame(const SurfaceDescriptor& d, double t, double u) {
  const Tan x = frame(d, t, u).omega_t_h;
  const double n = geometry(d.sig).metric(x, x);
  if (std::abs(n) < tol::kNullVector) throw std::domain_error("null horizontal frame");
  return x / std::sqrt(std::abs(n));
}

double totally_geodesic_residual(const SurfaceDescriptor& d, double t, double u, double h) {
  return gauss_curvature(d, t, u, h) - holomorphic_K(unit_horizontal_frame(d, t, u), d.sig);
}

Amplitudes plane_amplitudes(const SurfaceDescriptor& d, double t, double u) {
  const auto dec = decompose(unit_horizontal_frame(d, t, u), d.sig);
  return {dec.a, dec.b, dec.c};
}

SurfaceRun run_surface(const SurfaceDescriptor& d, const GridSpec& grid) {
  SurfaceRun run;
  auto& sum = run.summary;
  sum.id = d.id;
  const double pi = std::numbers::pi;
  const Mat twist_m = twist<double>(d.sig);

  // Closed form against expm on [0, 2pi]^2, or t in [0, 2] for the
  // hyperbolic examples.
  {
    const double t_hi = d.hyperbolic ? 2.0 : 2 * pi;
    for (int i = 0; i < grid.n_t; ++i) {
      for (int j = 0; j < grid.n_u; ++j) {
        const double t = t_hi * i / std::max(1, grid.n_t - 1);
        const double u = 2 * pi * j / std::max(1, grid.n_u - 1);
        const Mat f = evaluate(d, t, u);
        sum.max_expm_error = std::max(sum.max_expm_error, max_abs(Mat(f - evaluate_expm(d, t, u))));
        sum.max_group_error = std::max(sum.max_group_error, max_abs(Mat(f.adjoint() * twist_m * f - twist_m)));
        sum.max_group_error = std::max(sum.max_group_error, std::abs(det(f) - 1.0));
      }
    }
  }

  const double t_lo = grid.t_min.value_or(d.t_min);
  const double t_hi = grid.t_max.value_or(d.t_max);
  double k_sum = 0.0;
  std::size_t k_count = 0;
  for (int i = 0; i < grid.n_t; ++i) {
    for (int j = 0; j < grid.n_u; ++j) {
      SurfaceSample smp;
      smp.t = grid.n_t > 1 ? t_lo + (t_hi - t_lo) * i / (grid.n_t - 1) : t_lo;
      smp.u = 2 * pi * j / grid.n_u;
      const auto fr = frame(d, smp.t, smp.u);
      sum.max_horizontality = std::max(sum.max_horizontality, max_abs(fr.omega_t_v));

      const auto fd = frame(d, smp.t, smp.u, FrameMethod::finite_difference);
      sum.max_frame_fd_error = std::max({sum.max_frame_fd_error, max_abs(Vec(fr.omega_t - fd.omega_t)),
                                         max_abs(Vec(fr.omega_u - fd.omega_u))});
      if (d.omega_t_closed) {
        const auto fe = frame(d, smp.t, smp.u, FrameMethod::frechet);
        sum.max_frame_route_error = std::max({sum.max_frame_route_error, max_abs(Vec(fr.omega_t - fe.omega_t)),
                                              max_abs(Vec(fr.omega_u - fe.omega_u))});
      }

      smp.metric = induced_metric(d, smp.t, smp.u);
      if (d.expected_metric) {
        const auto e = d.expected_metric(smp.t);
        sum.max_metric_error = std::max({sum.max_metric_error, std::abs(smp.metric.E - e.E),
                                         std::abs(smp.metric.F - e.F), std::abs(smp.metric.G - e.G)});
      }
      smp.ac_residual = almost_complex_check(d, smp.t, smp.u).residual;
      sum.max_ac_residual = std::max(sum.max_ac_residual, smp.ac_residual);
      if (d.expected_amplitudes) {
        const auto amps = plane_amplitudes(d, smp.t, smp.u);
        for (std::size_t k = 0; k < 3; ++k) {
          sum.max_amplitude_deviation =
              std::max(sum.max_amplitude_deviation, std::abs(amps[k] - (*d.expected_amplitudes)[k]));
        }
      }

      try {
        smp.K = gauss_curvature(d, smp.t, smp.u);
        smp.tg_residual = smp.K - holomorphic_K(unit_horizontal_frame(d, smp.t, smp.u), d.sig);
        sum.max_tg_residual = std::max(sum.max_tg_residual, std::abs(smp.tg_residual));
        k_sum += smp.K;
        ++k_count;
        if (d.expected_K) sum.K_max_deviation = std::max(sum.K_max_deviation, std::abs(smp.K - *d.expected_K));
      } catch (const std::domain_error&) {
        smp.degenerate = true;
        ++sum.degenerate;
      }
      run.samples.push_back(smp);
    }
  }
  sum.samples = run.samples.size();
  sum.K_mean = k_count ? k_sum / static_cast<double>(k_count) : std::nan("");
  return run;
}

std::vector<CheckReport> summary_reports(const SurfaceDescriptor& d, const SurfaceSummary& s,
                                         const SurfaceTolerances& tols) {
  const std::string p = "surface" + std::to_string(d.id) + ".";
  const auto n = static_cast<std::int64_t>(s.samples);
  const auto nk = static_cast<std::int64_t>(s.samples - s.degenerate);
  std::vector<CheckReport> out;
  out.push_back(make_report(p + "expm_vs_closed_form", s.max_expm_error, n, tols.closed_form));
  out.push_back(make_report(p + "group_membership", s.max_group_error, n, tols.closed_form));
  out.push_back(make_report(p + "omega_t_horizontal", s.max_horizontality, n, tols.exact));
  out.push_back(make_report(p + "frame_analytic_vs_fd", s.max_frame_fd_error, n, tols.frame_fd));
  if (d.omega_t_closed) {
    out.push_back(make_report(p + "frame_closed_vs_frechet", s.max_frame_route_error, n, tols.closed_form));
  }
  out.push_back(make_report(p + "almost_complex", s.max_ac_residual, n, tol::kAlmostComplex));
  if (d.expected_metric) out.push_back(make_report(p + "induced_metric", s.max_metric_error, n, tols.closed_form));
  if (d.expected_amplitudes) {
    out.push_back(make_report(p + "distribution_amplitudes", s.max_amplitude_deviation, n, tol::kAmplitude));
  }
  if (d.expected_K) {
    out.push_back(make_report(p + "gauss_curvature", s.K_max_deviation, nk, tols.curvature,
                              "expected K=" + std::to_string(*d.expected_K)));
  }
  out.push_back(make_report(p + "totally_geodesic", s.max_tg_residual, nk, tols.curvature));
  return out;
}

void write_csv(std::ostream& os, int id, const std::vector<SurfaceSample>& samples) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << "id,t,u,E,F,G,K,tg_residual,ac_residual\n";
  os << std::setprecision(17);
  for (const auto& s : samples) {
    os << id << ',' << s.t << ',' << s.u << ',' << s.metric.E << ',' << s.metric.F << ',' << s.metric.G << ',';
    if (!s.degenerate) os << s.K;
    os << ',';
    if (!s.degenerate) os << s.tg_residual;
    os << ',' << s.ac_residual << '\n';
  }
  os.flags(flags);
  os.precision(prec);
}

nlohmann::json samples_json(int id, const SurfaceRun& run, const std::vector<CheckReport>& checks) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : run.samples) {
    rows.push_back({{"id", id},
                    {"t", s.t},
                    {"u", s.u},
                    {"E", s.metric.E},
                    {"F", s.metric.F},
                    {"G", s.metric.G},
                    {"K", s.degenerate ? nlohmann::json(nullptr) : nlohmann::json(s.K)},
                    {"tg_residual", s.degenerate ? nlohmann::json(nullptr) : nlohmann::json(s.tg_residual)},
                    {"ac_residual", s.ac_residual}});
  }
  auto doc = report_document("surface", checks);
  doc["surface_id"] = id;
  doc["samples"] = std::move(rows);
  return doc;
}

}  // namespace nkflag
