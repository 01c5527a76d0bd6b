#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>

namespace nkflag {

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// 3x3 complex matrix: group elements of SU(3)/SU(2,1) and their Lie algebras.
template <typename Scalar>
using ComplexMatrix3 = Eigen::Matrix<Complex<Scalar>, 3, 3>;

using ComplexMatrix3d = ComplexMatrix3<double>;

template <typename Derived>
auto commutator(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  using Plain = typename Derived::PlainObject;
  Plain r = a * b;
  r.noalias() -= b * a;
  return r;
}

template <typename Scalar>
ComplexMatrix3<Scalar> adjoint(const ComplexMatrix3<Scalar>& a) {
  return a.adjoint();
}

template <typename Scalar>
Complex<Scalar> trace(const ComplexMatrix3<Scalar>& a) {
  return a(0, 0) + a(1, 1) + a(2, 2);
}

/// Cofactor expansion along the first row.
template <typename Scalar>
Complex<Scalar> det(const ComplexMatrix3<Scalar>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Largest absolute row sum.
template <typename Derived>
typename Derived::RealScalar inf_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Entrywise maximum modulus; the error measure used by every check.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? typename Derived::RealScalar(0) : a.cwiseAbs().maxCoeff();
}

/// Matrix exponential by scaling and squaring with a degree-13 Pade
/// approximant (Higham 2005). Works for any fixed- or dynamic-size square
/// complex or real Eigen matrix.
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& a) {
  using Plain = typename Derived::PlainObject;
  using Real = typename Derived::RealScalar;

  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const Real norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > Real(theta13)) {
    squarings = static_cast<int>(std::ceil(std::log2(static_cast<double>(norm1) / theta13)));
  }
  const Plain x = a.derived() / std::ldexp(Real(1), squarings);

  const Plain ident = Plain::Identity(a.rows(), a.cols());
  const Plain x2 = x * x;
  const Plain x4 = x2 * x2;
  const Plain x6 = x4 * x2;
  auto c = [](int i) { return Real(b[static_cast<std::size_t>(i)]); };

  Plain inner_u = c(13) * x6 + c(11) * x4 + c(9) * x2;
  Plain u = x * (x6 * inner_u + c(7) * x6 + c(5) * x4 + c(3) * x2 + c(1) * ident);
  Plain inner_v = c(12) * x6 + c(10) * x4 + c(8) * x2;
  Plain v = x6 * inner_v + c(6) * x6 + c(4) * x4 + c(2) * x2 + c(0) * ident;

  Plain r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = (r * r).eval();
  return r;
}

/// Frechet derivative of expm at `a` in direction `e`, read off the upper
/// right block of exp([[a, e], [0, a]]).
template <typename Scalar>
ComplexMatrix3<Scalar> expm_frechet(const ComplexMatrix3<Scalar>& a, const ComplexMatrix3<Scalar>& e) {
  Eigen::Matrix<Complex<Scalar>, 6, 6> block = Eigen::Matrix<Complex<Scalar>, 6, 6>::Zero();
  block.template topLeftCorner<3, 3>() = a;
  block.template bottomRightCorner<3, 3>() = a;
  block.template topRightCorner<3, 3>() = e;
  return expm(block).template topRightCorner<3, 3>();
}

}  // namespace nkflag
