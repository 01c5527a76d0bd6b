#include "nkflag/lie_structure.hpp"
#include "nkflag/random.hpp"

#include "doctest.h"

#include <cmath>

using namespace nkflag;

namespace {

using Cx = std::complex<double>;
const double kS3 = std::sqrt(3.0);

// Coefficient read-out through Re tr(M X^H M Y) / 2, written out longhand.
double pairing(const ComplexMatrix3d& x, const ComplexMatrix3d& y, Signature sig) {
  const double m[3] = {1.0, 1.0, sig == Signature::pseudo ? -1.0 : 1.0};
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += m[i] * m[j] * (std::conj(x(j, i)) * y(j, i)).real();
  return 0.5 * s;
}

}  // namespace

TEST_CASE("[m1, m4] is diag(-2i, 2i, 0) = h1 - sqrt3 h2") {
  for (auto sig : {Signature::riemannian, Signature::pseudo}) {
    const LieAlgebrad alg(sig);
    const auto& b = alg.basis();
    ComplexMatrix3d want = ComplexMatrix3d::Zero();
    want(0, 0) = Cx(0, -2);
    want(1, 1) = Cx(0, 2);
    CHECK(max_abs(ComplexMatrix3d(commutator(b[kM1], b[kM4]) - want)) < 1e-15);

    AlgebraVectord coeff = AlgebraVectord::Zero();
    coeff(kH1) = 1.0;
    coeff(kH2) = -kS3;
    CHECK(max_abs(AlgebraVectord(alg.bracket(unit_algebra<double>(kM1), unit_algebra<double>(kM4)) - coeff)) <
          1e-14);
  }
}

TEST_CASE("Gram diagonals") {
  AlgebraVectord riem = AlgebraVectord::Ones();
  AlgebraVectord pseudo;
  pseudo << 1, 1, 1, -1, -1, 1, -1, -1;
  CHECK(max_abs(AlgebraVectord(LieAlgebrad(Signature::riemannian).gram_diagonal() - riem)) < 1e-15);
  CHECK(max_abs(AlgebraVectord(LieAlgebrad(Signature::pseudo).gram_diagonal() - pseudo)) < 1e-15);

  const LieAlgebrad alg(Signature::pseudo);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const double want = i == j ? pseudo(i) : 0.0;
      CHECK(std::abs(pairing(alg.basis()[i], alg.basis()[j], Signature::pseudo) - want) < 1e-15);
    }
}

TEST_CASE("basis matrices lie in the algebra") {
  for (auto sig : {Signature::riemannian, Signature::pseudo}) {
    const auto m = twist<double>(sig);
    for (const auto& x : basis<double>(sig)) {
      CHECK(std::abs(trace(x)) < 1e-15);
      CHECK(max_abs(ComplexMatrix3d(x.adjoint() * m + m * x)) < 1e-15);
    }
  }
}

TEST_CASE("bracket in coordinates matches the matrix commutator") {
  Sampler rng(3);
  for (auto sig : {Signature::riemannian, Signature::pseudo}) {
    const LieAlgebrad alg(sig);
    for (int n = 0; n < 100; ++n) {
      const auto x = rng.algebra(), y = rng.algebra();
      const auto a = alg.to_matrix(x), b = alg.to_matrix(y);
      const ComplexMatrix3d c = a * b - b * a;
      const auto v = alg.bracket(x, y);
      for (int k = 0; k < 8; ++k) {
        const auto& e = alg.basis()[k];
        CHECK(std::abs(v(k) - pairing(e, c, sig) / pairing(e, e, sig)) < 1e-13);
      }
    }
  }
}

TEST_CASE("Killing form is twice the metric on su(3)") {
  Sampler rng(5);
  const LieAlgebrad alg(Signature::riemannian);
  for (int n = 0; n < 100; ++n) {
    const auto x = rng.algebra(), y = rng.algebra();
    CHECK(std::abs(alg.killing(x, y) - 2 * alg.metric(x, y)) < 1e-13);
  }
}

TEST_CASE("Ad of the isotropy rotates V1 by sqrt3 s - t") {
  Sampler rng(9);
  for (auto sig : {Signature::riemannian, Signature::pseudo}) {
    const LieAlgebrad alg(sig);
    for (int n = 0; n < 50; ++n) {
      const double s = rng.uniform(-3, 3), t = rng.uniform(-3, 3);
      const double th = kS3 * s - t;
      AlgebraVectord want = AlgebraVectord::Zero();
      want(kM1) = std::cos(th);
      want(kM4) = -std::sin(th);
      CHECK(max_abs(AlgebraVectord(alg.ad_isotropy(s, t, unit_algebra<double>(kM1)) - want)) < 1e-14);
    }
  }
}

TEST_CASE("flipped_m2 variant only negates m2") {
  const auto std_b = basis<double>(Signature::riemannian);
  const auto flip_b = basis<double>(Signature::riemannian, BasisVariant::flipped_m2);
  for (int k = 0; k < 8; ++k) {
    const ComplexMatrix3d want = k == kM2 ? ComplexMatrix3d(-std_b[k]) : std_b[k];
    CHECK(max_abs(ComplexMatrix3d(flip_b[k] - want)) == 0.0);
  }
}

TEST_CASE("LieAlgebra instantiates for long double") {
  const LieAlgebra<long double> alg(Signature::pseudo);
  const auto v = alg.bracket(unit_algebra<long double>(kM1), unit_algebra<long double>(kM4));
  CHECK(std::abs(v(kH1) - 1.0L) < 1e-17L);
  CHECK(std::abs(v(kH2) + std::sqrt(3.0L)) < 1e-17L);
}
