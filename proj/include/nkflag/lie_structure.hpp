#pragma once

#include "nkflag/matrix_core.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string_view>

namespace nkflag {

/// +1 selects su(3) with its trace metric; -1 selects su(2,1) with the
/// I_- twisted trace metric.
enum class Signature : int { riemannian = 1, pseudo = -1 };

constexpr int epsilon(Signature sig) { return static_cast<int>(sig); }

constexpr std::string_view to_string(Signature sig) {
  return sig == Signature::riemannian ? "riemannian" : "pseudo";
}

/// Coordinates in the ordered basis (h1, h2, m1, ..., m6).
template <typename Scalar>
using AlgebraVector = Eigen::Matrix<Scalar, 8, 1>;

/// Coordinates in (m1, ..., m6); the tangent space at o = pi(I).
template <typename Scalar>
using TangentVector = Eigen::Matrix<Scalar, 6, 1>;

using AlgebraVectord = AlgebraVector<double>;
using TangentVectord = TangentVector<double>;

enum BasisIndex : int { kH1 = 0, kH2, kM1, kM2, kM3, kM4, kM5, kM6 };

/// Basis variants. `flipped_m2` negates m2 and exists only as a negative
/// control for the curvature cross-check.
enum class BasisVariant { standard, flipped_m2 };

template <typename Scalar>
AlgebraVector<Scalar> unit_algebra(int index) {
  return AlgebraVector<Scalar>::Unit(index);
}

/// Tangent unit vector for m_k, k in 1..6.
template <typename Scalar>
TangentVector<Scalar> unit_m(int k) {
  return TangentVector<Scalar>::Unit(k - 1);
}

template <typename Scalar>
AlgebraVector<Scalar> embed(const TangentVector<Scalar>& x) {
  AlgebraVector<Scalar> v;
  v << Scalar(0), Scalar(0), x;
  return v;
}

template <typename Scalar>
TangentVector<Scalar> tangent_part(const AlgebraVector<Scalar>& x) {
  return x.template tail<6>();
}

template <typename Scalar>
AlgebraVector<Scalar> project_m(const AlgebraVector<Scalar>& x) {
  AlgebraVector<Scalar> v = x;
  v.template head<2>().setZero();
  return v;
}

template <typename Scalar>
AlgebraVector<Scalar> project_h(const AlgebraVector<Scalar>& x) {
  AlgebraVector<Scalar> v = x;
  v.template tail<6>().setZero();
  return v;
}

/// Projection of a tangent vector onto V_k = span(m_k, m_{k+3}), k in 1..3.
template <typename Scalar>
TangentVector<Scalar> project_distribution(const TangentVector<Scalar>& x, int k) {
  TangentVector<Scalar> v = TangentVector<Scalar>::Zero();
  v(k - 1) = x(k - 1);
  v(k + 2) = x(k + 2);
  return v;
}

/// I for su(3), I_- = diag(1, 1, -1) for su(2,1).
template <typename Scalar>
ComplexMatrix3<Scalar> twist(Signature sig) {
  ComplexMatrix3<Scalar> m = ComplexMatrix3<Scalar>::Identity();
  if (sig == Signature::pseudo) m(2, 2) = Scalar(-1);
  return m;
}

template <typename Scalar>
std::array<ComplexMatrix3<Scalar>, 8> basis(Signature sig, BasisVariant variant = BasisVariant::standard) {
  using C = Complex<Scalar>;
  const C i(0, 1);
  const Scalar s3 = std::sqrt(Scalar(3));
  const Scalar e = Scalar(epsilon(sig));
  std::array<ComplexMatrix3<Scalar>, 8> b;
  for (auto& m : b) m.setZero();

  b[kH1](0, 0) = -i;
  b[kH1](2, 2) = i;
  b[kH2](0, 0) = i / s3;
  b[kH2](1, 1) = Scalar(-2) * i / s3;
  b[kH2](2, 2) = i / s3;

  b[kM1](0, 1) = -1;
  b[kM1](1, 0) = 1;
  b[kM4](0, 1) = i;
  b[kM4](1, 0) = i;

  // The su(2,1) blocks touching the third row/column differ by the sign e
  // on the upper-triangular entry.
  b[kM2](1, 2) = -e;
  b[kM2](2, 1) = 1;
  b[kM3](0, 2) = -e;
  b[kM3](2, 0) = 1;
  b[kM5](1, 2) = e * i;
  b[kM5](2, 1) = i;
  b[kM6](0, 2) = e * i;
  b[kM6](2, 0) = i;

  if (variant == BasisVariant::flipped_m2) b[kM2] = -b[kM2];
  return b;
}

/// g(X, Y) = 1/2 Re tr(M conj(X)^T M Y), M = I or I_-.
template <typename Scalar>
Scalar trace_metric(const ComplexMatrix3<Scalar>& x, const ComplexMatrix3<Scalar>& y, Signature sig) {
  const ComplexMatrix3<Scalar> m = twist<Scalar>(sig);
  return Scalar(0.5) * trace(ComplexMatrix3<Scalar>(m * x.adjoint() * m * y)).real();
}

/// B(X, Y) = Re tr(conj(X)^T Y).
template <typename Scalar>
Scalar killing_form(const ComplexMatrix3<Scalar>& x, const ComplexMatrix3<Scalar>& y) {
  return trace(ComplexMatrix3<Scalar>(x.adjoint() * y)).real();
}

/// The diagonal unitary parametrising H = U(1) x U(1).
template <typename Scalar>
ComplexMatrix3<Scalar> isotropy_element(Scalar s, Scalar t) {
  using C = Complex<Scalar>;
  const Scalar s3 = std::sqrt(Scalar(3));
  ComplexMatrix3<Scalar> h = ComplexMatrix3<Scalar>::Zero();
  h(0, 0) = std::exp(C(0, (s3 * s - Scalar(3) * t) / Scalar(3)));
  h(1, 1) = std::exp(C(0, Scalar(-2) * s / s3));
  h(2, 2) = std::exp(C(0, (s3 * s + Scalar(3) * t) / Scalar(3)));
  return h;
}

/// One of the two real forms with its basis, metric signs and cached
/// structure constants. Immutable after construction.
template <typename Scalar>
class LieAlgebra {
 public:
  using Matrix = ComplexMatrix3<Scalar>;
  using Vector = AlgebraVector<Scalar>;
  using Tangent = TangentVector<Scalar>;
  using AdMatrix = Eigen::Matrix<Scalar, 8, 8>;

  explicit LieAlgebra(Signature sig, BasisVariant variant = BasisVariant::standard)
      : sig_(sig), variant_(variant), basis_(nkflag::basis<Scalar>(sig, variant)) {
    for (int k = 0; k < 8; ++k) {
      gram_(k) = trace_metric(basis_[k], basis_[k], sig_);
    }
    // ad_[i] * y = [e_i, y] in coordinates.
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        ad_[i].col(j) = coefficients(commutator(basis_[i], basis_[j]));
      }
    }
  }

  Signature signature() const { return sig_; }
  BasisVariant variant() const { return variant_; }
  const std::array<Matrix, 8>& basis() const { return basis_; }

  /// Diagonal of the Gram matrix: +-1 per basis element.
  const Vector& gram_diagonal() const { return gram_; }
  Tangent tangent_signs() const { return gram_.template tail<6>(); }

  Eigen::Matrix<Scalar, 8, 8> gram_matrix() const {
    Eigen::Matrix<Scalar, 8, 8> g;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) g(i, j) = trace_metric(basis_[i], basis_[j], sig_);
    return g;
  }

  Matrix to_matrix(const Vector& x) const {
    Matrix m = Matrix::Zero();
    for (int k = 0; k < 8; ++k) m += x(k) * basis_[k];
    return m;
  }

  /// Coefficients via the metric: x_k = g(e_k, X) / g(e_k, e_k).
  Vector coefficients(const Matrix& m) const {
    Vector x;
    for (int k = 0; k < 8; ++k) x(k) = trace_metric(basis_[k], m, sig_) / gram_(k);
    return x;
  }

  /// Structure constants: c(i, j, k) is the e_k-coefficient of [e_i, e_j].
  Scalar structure_constant(int i, int j, int k) const { return ad_[i](k, j); }
  const AdMatrix& ad(int i) const { return ad_[i]; }

  Vector bracket(const Vector& x, const Vector& y) const {
    Vector r = Vector::Zero();
    for (int i = 0; i < 8; ++i) {
      if (x(i) != Scalar(0)) r.noalias() += x(i) * (ad_[i] * y);
    }
    return r;
  }

  Scalar metric(const Vector& x, const Vector& y) const {
    return (x.array() * gram_.array() * y.array()).sum();
  }

  Scalar metric(const Tangent& x, const Tangent& y) const {
    return (x.array() * gram_.template tail<6>().array() * y.array()).sum();
  }

  /// Killing form in coordinates (computed through the matrices).
  Scalar killing(const Vector& x, const Vector& y) const {
    return killing_form(to_matrix(x), to_matrix(y));
  }

  Vector ad_isotropy(Scalar s, Scalar t, const Vector& x) const {
    const Matrix h = isotropy_element(s, t);
    return coefficients(h * to_matrix(x) * h.adjoint());
  }

  /// Bi-invariant connection D_X Y = 1/2 [X, Y] on the group.
  Vector biinvariant_connection(const Vector& x, const Vector& y) const {
    return Scalar(0.5) * bracket(x, y);
  }

  /// R^D(X, Y) Z = 1/4 [Z, [X, Y]].
  Vector biinvariant_curvature(const Vector& x, const Vector& y, const Vector& z) const {
    return Scalar(0.25) * bracket(z, bracket(x, y));
  }

 private:
  Signature sig_;
  BasisVariant variant_;
  std::array<Matrix, 8> basis_;
  Vector gram_;
  std::array<AdMatrix, 8> ad_;
};

using LieAlgebrad = LieAlgebra<double>;

}  // namespace nkflag
