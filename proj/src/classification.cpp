#include "nkflag/classification.hpp"

#include "nkflag/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace nkflag {
namespace {

using Tan = TangentVectord;

Tan unit_in(int k, double phase) {
  return std::cos(phase) * unit_m<double>(k) + std::sin(phase) * unit_m<double>(k + 3);
}

double residual_norm(const std::array<double, 3>& r) {
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

double metric_norm(const Amplitudes& v, Signature sig) {
  const double e = epsilon(sig);
  return v[0] * v[0] + e * v[1] * v[1] + e * v[2] * v[2];
}

bool same_amplitudes(const Amplitudes& x, const Amplitudes& y, double tol) {
  for (std::size_t i = 0; i < 3; ++i)
    if (std::abs(x[i] - y[i]) > tol) return false;
  return true;
}

std::string describe(const Amplitudes& amps, double K, int metric_sign) {
  std::ostringstream os;
  os << "TM in ";
  bool first = true;
  for (std::size_t k = 0; k < 3; ++k) {
    if (amps[k] > 0.0) {
      os << (first ? "" : "+") << "V" << k + 1;
      first = false;
    }
  }
  os << ": ";
  const double rounded = std::round(K * 1e9) / 1e9;
  if (metric_sign < 0) {
    os << "anti-isometric to a hyperbolic plane of curvature " << -rounded;
  } else if (std::abs(rounded) == 0.0) {
    os << "flat";
  } else {
    os << "sphere of curvature " << rounded;
  }
  return os.str();
}

SolutionFamily make_family(const Amplitudes& amps, Signature sig) {
  SolutionFamily f;
  f.amplitudes = amps;
  f.K = closed_form_K(amps[0], amps[1], amps[2], sig);
  f.metric_sign = metric_norm(amps, sig) > 0.0 ? 1 : -1;
  f.description = describe(amps, f.K, f.metric_sign);
  return f;
}

// Families ordered by support size, then by descending amplitudes.
bool family_order(const Amplitudes& x, const Amplitudes& y) {
  auto support = [](const Amplitudes& v) { return std::count_if(v.begin(), v.end(), [](double t) { return t > 0.0; }); };
  if (support(x) != support(y)) return support(x) < support(y);
  return x > y;
}

}  // namespace

const NearlyKahlerd& geometry(Signature sig) {
  static const NearlyKahlerd riemannian(Signature::riemannian);
  static const NearlyKahlerd pseudo(Signature::pseudo);
  return sig == Signature::riemannian ? riemannian : pseudo;
}

TangentDecomposition make_decomposition(double a, double b, double c, Signature sig, double phase_y,
                                        double phase_z, double phase_w) {
  TangentDecomposition d;
  d.a = a;
  d.b = b;
  d.c = c;
  d.Y = unit_in(1, phase_y);
  d.Z = unit_in(2, phase_z);
  d.W = unit_in(3, phase_w);
  d.sig = sig;
  return d;
}

TangentDecomposition decompose(const Tan& x, Signature sig) {
  TangentDecomposition d;
  d.sig = sig;
  std::array<double*, 3> amp = {&d.a, &d.b, &d.c};
  std::array<Tan*, 3> unit = {&d.Y, &d.Z, &d.W};
  for (int k = 1; k <= 3; ++k) {
    const Tan p = project_distribution<double>(x, k);
    const double n = p.norm();
    const auto i = static_cast<std::size_t>(k - 1);
    *amp[i] = n;
    if (n > 0.0) *unit[i] = p / n;
  }
  return d;
}

std::array<Tan, 3> ji_on_JX(const TangentDecomposition& d) {
  return {-d.a * d.Y + d.b * d.Z + d.c * d.W, d.a * d.Y + d.b * d.Z - d.c * d.W,
          d.a * d.Y - d.b * d.Z + d.c * d.W};
}

CurvatureCoefficients r_xjx_closed(double a, double b, double c, Signature sig) {
  const double e = epsilon(sig);
  CurvatureCoefficients r;
  r.x = -0.5 * (a * a + e * b * b + e * c * c);
  r.y = 1.5 * (3.0 * a * a * a - e * a * b * b - e * a * c * c);
  r.z = 1.5 * (3.0 * e * b * b * b - a * a * b - e * b * c * c);
  r.w = 1.5 * (3.0 * e * c * c * c - e * b * b * c - a * a * c);
  return r;
}

Tan r_xjx_vector(const TangentDecomposition& d) {
  const auto r = r_xjx_closed(d.a, d.b, d.c, d.sig);
  return r.x * d.X() + r.y * d.Y + r.z * d.Z + r.w * d.W;
}

double closed_form_K(double a, double b, double c, Signature sig) {
  const double e = epsilon(sig);
  const auto t = r_xjx_closed(a, b, c, sig).along_frame(a, b, c);
  const double n = a * a + e * b * b + e * c * c;
  return (t[0] * a + e * t[1] * b + e * t[2] * c) / (n * n);
}

std::array<double, 3> minor_equations(double a, double b, double c, Signature sig) {
  const double e = epsilon(sig);
  return {a * (a * a - e * b * b) * b, a * (a * a - e * c * c) * c, b * (c * c - b * b) * c};
}

std::array<double, 3> rank_one_minors(double a, double b, double c, Signature sig) {
  const auto r = r_xjx_closed(a, b, c, sig);
  const double p = r.y, q = r.z, s = r.w;
  return {p * b - q * a, p * c - s * a, q * c - s * b};
}

Amplitudes canonical_amplitudes(Amplitudes v, Signature sig) {
  for (auto& t : v) t = std::abs(t);
  if (sig == Signature::riemannian) {
    std::sort(v.begin(), v.end(), std::greater<>());
  } else if (v[2] > v[1]) {
    std::swap(v[1], v[2]);
  }
  return v;
}

std::vector<SolutionFamily> case_analysis(Signature sig) {
  const double e = epsilon(sig);
  // Where both variables of an equation are non-zero it forces a relation
  // between their squares: sq[i] = ratio * sq[j].
  struct Relation {
    int i, j;
    double ratio;
  };
  const std::array<Relation, 3> relations = {{{0, 1, e}, {0, 2, e}, {1, 2, 1.0}}};

  std::vector<Amplitudes> found;
  for (int mask = 1; mask < 8; ++mask) {
    auto in_support = [mask](int k) { return (mask >> k) & 1; };
    std::array<std::optional<double>, 3> sq;
    int first = 0;
    while (!in_support(first)) ++first;
    sq[static_cast<std::size_t>(first)] = 1.0;
    bool consistent = true;
    // Propagate twice; three variables need at most two passes.
    for (int pass = 0; pass < 2 && consistent; ++pass) {
      for (const auto& r : relations) {
        if (!in_support(r.i) || !in_support(r.j)) continue;
        auto& si = sq[static_cast<std::size_t>(r.i)];
        auto& sj = sq[static_cast<std::size_t>(r.j)];
        if (si && !sj) sj = *si / r.ratio;
        else if (!si && sj) si = r.ratio * *sj;
        else if (si && sj && std::abs(*si - r.ratio * *sj) > 1e-14) consistent = false;
      }
    }
    Amplitudes amps{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!in_support(static_cast<int>(k))) continue;
      if (!sq[k] || *sq[k] <= 0.0) consistent = false;
      else amps[k] = std::sqrt(*sq[k]);
    }
    if (!consistent) continue;
    const double n = metric_norm(amps, sig);
    if (std::abs(n) < tol::kNullVector) continue;
    for (auto& t : amps) t /= std::sqrt(std::abs(n));
    amps = canonical_amplitudes(amps, sig);
    const bool dup = std::any_of(found.begin(), found.end(),
                                 [&](const Amplitudes& f) { return same_amplitudes(f, amps, 1e-12); });
    if (!dup) found.push_back(amps);
  }
  std::sort(found.begin(), found.end(), family_order);

  std::vector<SolutionFamily> families;
  for (const auto& amps : found) families.push_back(make_family(amps, sig));
  return families;
}

GridScanResult grid_scan(Signature sig, double step) {
  const double half_pi = std::numbers::pi / 2.0;
  auto point = [](double alpha, double beta) {
    return Amplitudes{std::cos(alpha), std::sin(alpha) * std::cos(beta), std::sin(alpha) * std::sin(beta)};
  };
  auto residual = [&](double alpha, double beta) {
    const auto p = point(alpha, beta);
    return residual_norm(minor_equations(p[0], p[1], p[2], sig));
  };

  const int n = static_cast<int>(std::ceil(half_pi / step)) + 1;
  const double h = half_pi / (n - 1);
  std::vector<double> r(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto at = [&](int i, int j) -> double& { return r[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i, j) = residual(i * h, j * h);

  GridScanResult out;
  out.grid_points = r.size();
  constexpr double coarse_cutoff = 1e-2;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = at(i, j);
      if (v > coarse_cutoff) continue;
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          const int ii = i + di, jj = j + dj;
          if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= n || jj >= n) continue;
          if (at(ii, jj) < v) {
            local_min = false;
            break;
          }
        }
      if (!local_min) continue;
      ++out.candidates;

      // Compass search, halving the step until it is below round-off.
      double alpha = i * h, beta = j * h, best = v, s = h;
      while (s > 1e-15) {
        bool moved = false;
        for (const auto& [da, db] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          const double na = std::clamp(alpha + da * s, 0.0, half_pi);
          const double nb = std::clamp(beta + db * s, 0.0, half_pi);
          const double nv = residual(na, nb);
          if (nv < best) {
            alpha = na;
            beta = nb;
            best = nv;
            moved = true;
          }
        }
        if (!moved) s *= 0.5;
      }
      if (best > 1e-10) continue;

      auto amps = point(alpha, beta);
      const double norm = metric_norm(amps, sig);
      if (std::abs(norm) < tol::kNullVector) {
        ++out.null_rejected;
        continue;
      }
      for (auto& t : amps) {
        t /= std::sqrt(std::abs(norm));
        if (t < 1e-9) t = 0.0;
      }
      amps = canonical_amplitudes(amps, sig);
      out.max_refined_residual = std::max(out.max_refined_residual, best);
      const bool dup = std::any_of(out.solutions.begin(), out.solutions.end(),
                                   [&](const Amplitudes& f) { return same_amplitudes(f, amps, 1e-6); });
      if (!dup) out.solutions.push_back(amps);
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end(), family_order);
  return out;
}

std::vector<SolutionFamily> solve_families(Signature sig) {
  auto families = case_analysis(sig);
  const auto scan = grid_scan(sig);
  for (const auto& s : scan.solutions) {
    const bool known = std::any_of(families.begin(), families.end(),
                                   [&](const SolutionFamily& f) { return same_amplitudes(f.amplitudes, s, 1e-8); });
    if (!known) {
      std::ostringstream os;
      os << "grid oracle found a family missed by the case analysis: (" << s[0] << ", " << s[1] << ", " << s[2] << ")";
      throw std::runtime_error(os.str());
    }
  }
  for (const auto& f : families) {
    const bool seen = std::any_of(scan.solutions.begin(), scan.solutions.end(),
                                  [&](const Amplitudes& s) { return same_amplitudes(f.amplitudes, s, 1e-8); });
    if (!seen) throw std::runtime_error("case analysis family not confirmed by grid oracle: " + f.description);
  }
  return families;
}

double holomorphic_K(const Tan& x, Signature sig) {
  const auto& nk = geometry(sig);
  const double xx = nk.metric(x, x);
  if (std::abs(xx) < tol::kNullVector) throw std::domain_error("holomorphic_K: null or near-null tangent vector");
  const Tan jx = nk.J(x);
  return nk.metric(nk.curvature_tensorial(x, jx, jx), x) / (xx * nk.metric(jx, jx));
}

PhaseAlignment phase_align(const Tan& y, const Tan& z, const Tan& w, Signature sig) {
  const auto& nk = geometry(sig);
  const Tan g = nk.G(y, z);
  const Tan jw = nk.J(w);
  PhaseAlignment p;
  p.theta = std::atan2(nk.metric(g, jw) / nk.metric(jw, jw), nk.metric(g, w) / nk.metric(w, w));
  p.phi = (p.theta - std::numbers::pi / 2.0) / 3.0;
  const double cp = std::cos(p.phi), sp = std::sin(p.phi);
  p.Y = cp * y + sp * nk.J(y);
  p.Z = cp * z + sp * nk.J(z);
  p.W = cp * w + sp * jw;
  p.residual = max_abs(Tan(nk.G(p.Y, p.Z) - nk.J(p.W)));
  return p;
}

}  // namespace nkflag
