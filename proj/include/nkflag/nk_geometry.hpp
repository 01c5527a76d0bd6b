#pragma once

#include "nkflag/lie_structure.hpp"

#include <array>
#include <stdexcept>
#include <string_view>

namespace nkflag {

/// Weights of the invariant metric family on V1, V2, V3.
/// (1, 1, 1) is the submersion (nearly Kahler) metric.
struct MetricParams {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double lambda3 = 1.0;

  MetricParams() = default;
  MetricParams(double l1, double l2, double l3) : lambda1(l1), lambda2(l2), lambda3(l3) {
    if (!(l1 > 0.0 && l2 > 0.0 && l3 > 0.0)) {
      throw std::invalid_argument("metric weights must be positive");
    }
  }
};

/// The nearly Kahler structure J and the three structures J1, J2, J3.
enum class AcsKind { J, J1, J2, J3 };

inline constexpr std::array<AcsKind, 4> kAllAcs = {AcsKind::J, AcsKind::J1, AcsKind::J2, AcsKind::J3};

constexpr std::string_view to_string(AcsKind kind) {
  switch (kind) {
    case AcsKind::J: return "J";
    case AcsKind::J1: return "J1";
    case AcsKind::J2: return "J2";
    case AcsKind::J3: return "J3";
  }
  return "?";
}

constexpr AcsKind partial_acs(int i) {
  return i == 1 ? AcsKind::J1 : i == 2 ? AcsKind::J2 : AcsKind::J3;
}

template <typename Scalar>
using Endomorphism6 = Eigen::Matrix<Scalar, 6, 6>;

/// Each structure sends m_k to s_k m_{k+3} (k = 1, 2, 3) and m_{k+3} to
/// -s_k m_k; s is the sign row of the structure.
template <typename Scalar>
Endomorphism6<Scalar> acs_matrix(AcsKind kind) {
  std::array<int, 3> s{};
  switch (kind) {
    case AcsKind::J: s = {1, 1, -1}; break;
    case AcsKind::J1: s = {1, -1, 1}; break;
    case AcsKind::J2: s = {-1, -1, -1}; break;
    case AcsKind::J3: s = {-1, 1, 1}; break;
  }
  Endomorphism6<Scalar> a = Endomorphism6<Scalar>::Zero();
  for (int k = 0; k < 3; ++k) {
    a(k + 3, k) = Scalar(s[static_cast<std::size_t>(k)]);
    a(k, k + 3) = -Scalar(s[static_cast<std::size_t>(k)]);
  }
  return a;
}

template <typename Scalar>
TangentVector<Scalar> apply_acs(AcsKind kind, const TangentVector<Scalar>& x) {
  static const std::array<Endomorphism6<Scalar>, 4> cache = {
      acs_matrix<Scalar>(AcsKind::J), acs_matrix<Scalar>(AcsKind::J1),
      acs_matrix<Scalar>(AcsKind::J2), acs_matrix<Scalar>(AcsKind::J3)};
  return cache[static_cast<std::size_t>(kind)] * x;
}

/// g_lambda(X, Y) = sum_k lambda_k <X_k, Y_k>_k with the signature signs of
/// each distribution.
template <typename Scalar>
Scalar metric_family(const MetricParams& p, const TangentVector<Scalar>& x,
                     const TangentVector<Scalar>& y, Signature sig) {
  const Scalar e = Scalar(epsilon(sig));
  const std::array<Scalar, 3> w = {Scalar(p.lambda1), e * Scalar(p.lambda2), e * Scalar(p.lambda3)};
  Scalar r(0);
  for (int k = 0; k < 3; ++k) {
    const auto wk = w[static_cast<std::size_t>(k)];
    r += wk * (x(k) * y(k) + x(k + 3) * y(k + 3));
  }
  return r;
}

/// Levi-Civita connection, G, the derivatives of J_i and the curvature tensor
/// at the base point o, for one signature.
template <typename Scalar>
class NearlyKahler {
 public:
  using Tangent = TangentVector<Scalar>;
  using Endo = Endomorphism6<Scalar>;

  explicit NearlyKahler(Signature sig, BasisVariant variant = BasisVariant::standard)
      : algebra_(sig, variant) {
    for (AcsKind k : kAllAcs) acs_[static_cast<std::size_t>(k)] = acs_matrix<Scalar>(k);
  }

  const LieAlgebra<Scalar>& algebra() const { return algebra_; }
  Signature signature() const { return algebra_.signature(); }
  const Endo& acs(AcsKind kind) const { return acs_[static_cast<std::size_t>(kind)]; }
  Tangent J(const Tangent& x) const { return acs(AcsKind::J) * x; }

  Scalar metric(const Tangent& x, const Tangent& y) const { return algebra_.metric(x, y); }

  /// (nabla_X Y)_o = -1/2 [X, Y]_m.
  Tangent nabla(const Tangent& x, const Tangent& y) const {
    return Scalar(-0.5) * tangent_part(algebra_.bracket(embed(x), embed(y)));
  }

  /// (nabla_X T) Y = nabla_X (T Y) - T nabla_X Y for an invariant endomorphism T.
  Tangent covariant_derivative(const Endo& t, const Tangent& x, const Tangent& y) const {
    return nabla(x, t * y) - t * nabla(x, y);
  }

  /// G(X, Y) = (nabla_X J) Y.
  Tangent G(const Tangent& x, const Tangent& y) const {
    return covariant_derivative(acs(AcsKind::J), x, y);
  }

  /// (nabla_X J_i) Y, i in 1..3.
  Tangent nabla_J(int i, const Tangent& x, const Tangent& y) const {
    return covariant_derivative(acs(partial_acs(i)), x, y);
  }

  /// -1/2 G(X, Y) - 1/2 J G(J_i X, Y).
  Tangent nabla_J_closed(int i, const Tangent& x, const Tangent& y) const {
    const Endo& ji = acs(partial_acs(i));
    return Scalar(-0.5) * G(x, y) - Scalar(0.5) * J(G(ji * x, y));
  }

  /// Reductive homogeneous space curvature from brackets:
  /// 1/4 [X,[Y,Z]_m]_m - 1/4 [Y,[X,Z]_m]_m - 1/2 [[X,Y]_m,Z]_m - [[X,Y]_h,Z].
  Tangent curvature_lie(const Tangent& x, const Tangent& y, const Tangent& z) const {
    using V = AlgebraVector<Scalar>;
    const V X = embed(x), Y = embed(y), Z = embed(z);
    const auto& g = algebra_;
    const V xy = g.bracket(X, Y);
    V r = Scalar(0.25) * project_m(g.bracket(X, project_m(g.bracket(Y, Z)))) -
          Scalar(0.25) * project_m(g.bracket(Y, project_m(g.bracket(X, Z)))) -
          Scalar(0.5) * project_m(g.bracket(project_m(xy), Z)) - g.bracket(project_h(xy), Z);
    return tangent_part(r);
  }

  /// The five groups of the tensorial expression: the constant-curvature
  /// term, the J term, and one term per J_i. Their sum is the curvature.
  std::array<Tangent, 5> curvature_terms(const Tangent& x, const Tangent& y, const Tangent& z) const {
    std::array<Tangent, 5> t;
    t[0] = Scalar(0.25) * (metric(y, z) * x - metric(x, z) * y);
    t[1] = Scalar(-0.25) * kahler_like_term(acs(AcsKind::J), x, y, z);
    for (int i = 1; i <= 3; ++i) {
      t[static_cast<std::size_t>(i + 1)] = Scalar(0.5) * kahler_like_term(acs(partial_acs(i)), x, y, z);
    }
    return t;
  }

  Tangent curvature_tensorial(const Tangent& x, const Tangent& y, const Tangent& z) const {
    const auto t = curvature_terms(x, y, z);
    return t[0] + t[1] + t[2] + t[3] + t[4];
  }

 private:
  // g(TY,Z) TX - g(TX,Z) TY + 2 g(X,TY) TZ
  Tangent kahler_like_term(const Endo& t, const Tangent& x, const Tangent& y, const Tangent& z) const {
    const Tangent tx = t * x, ty = t * y, tz = t * z;
    return metric(ty, z) * tx - metric(tx, z) * ty + Scalar(2) * metric(x, ty) * tz;
  }

  LieAlgebra<Scalar> algebra_;
  std::array<Endo, 4> acs_;
};

using NearlyKahlerd = NearlyKahler<double>;

}  // namespace nkflag
