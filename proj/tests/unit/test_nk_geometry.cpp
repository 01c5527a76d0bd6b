#include "nkflag/nk_geometry.hpp"
#include "nkflag/random.hpp"
#include "nkflag/suites.hpp"

#include "doctest.h"

using namespace nkflag;

namespace {

const std::array<Signature, 2> kSigs = {Signature::riemannian, Signature::pseudo};

TangentVectord m(int k) { return unit_m<double>(k); }

double max_diff(const TangentVectord& a, const TangentVectord& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("connection from raw matrices: -1/2 [X, Y] projected to m") {
  for (auto sig : kSigs) {
    const NearlyKahlerd nk(sig);
    const auto& alg = nk.algebra();
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j) {
        const auto& a = alg.basis()[kM1 + i - 1];
        const auto& b = alg.basis()[kM1 + j - 1];
        const ComplexMatrix3d c = a * b - b * a;
        TangentVectord want;
        for (int k = 0; k < 6; ++k) {
          const auto& e = alg.basis()[kM1 + k];
          want(k) = -0.5 * trace_metric(e, c, sig) / trace_metric(e, e, sig);
        }
        CHECK(max_diff(nk.nabla(m(i), m(j)), want) < 1e-15);
      }
  }
}

TEST_CASE("G(m1, m2) = m6 and G(m2, m1) = -m6") {
  for (auto sig : kSigs) {
    const NearlyKahlerd nk(sig);
    CHECK(max_diff(nk.G(m(1), m(2)), m(6)) < 1e-15);
    CHECK(max_diff(nk.G(m(2), m(1)), -m(6)) < 1e-15);
  }
}

TEST_CASE("tabulated connection has 24 entries of size 1/2") {
  const auto& tab = tabulated_connection();
  CHECK(tab.size() == 24);
  for (const auto& e : tab) CHECK(std::abs(std::abs(e.coeff) - 0.5) == 0.0);
  const ConnectionEntry v1{2, 3, 1, 0.5};
  CHECK(expected_connection_coeff(v1, Signature::pseudo) == -0.5);
  CHECK(expected_connection_coeff(v1, Signature::riemannian) == 0.5);
}

TEST_CASE("bi-invariant curvature R(m1, m2) m1 = 1/4 [m1, [m1, m2]]") {
  for (auto sig : kSigs) {
    const LieAlgebrad alg(sig);
    const auto& b = alg.basis();
    const ComplexMatrix3d inner = b[kM1] * b[kM2] - b[kM2] * b[kM1];
    const ComplexMatrix3d want = 0.25 * (b[kM1] * inner - inner * b[kM1]);
    const auto got = alg.biinvariant_curvature(unit_algebra<double>(kM1), unit_algebra<double>(kM2),
                                               unit_algebra<double>(kM1));
    CHECK(max_abs(ComplexMatrix3d(alg.to_matrix(got) - want)) < 1e-15);
  }
}

TEST_CASE("almost complex structures square to -1 and are isometries") {
  Sampler rng(17);
  for (auto sig : kSigs) {
    const NearlyKahlerd nk(sig);
    for (auto k : kAllAcs) {
      CHECK((nk.acs(k) * nk.acs(k) + Endomorphism6<double>::Identity()).cwiseAbs().maxCoeff() == 0.0);
      for (int n = 0; n < 20; ++n) {
        const auto x = rng.tangent(), y = rng.tangent();
        CHECK(std::abs(nk.metric(nk.acs(k) * x, nk.acs(k) * y) - nk.metric(x, y)) < 1e-14);
      }
    }
    CHECK(max_diff(nk.J(m(1)), m(4)) == 0.0);
    CHECK(max_diff(nk.J(m(3)), -m(6)) == 0.0);
  }
}

TEST_CASE("metric family rejects non-positive weights") {
  CHECK_THROWS_AS(MetricParams(1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(MetricParams(-1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_NOTHROW(MetricParams(0.5, 2.0, 3.0));
}

TEST_CASE("curvature: bracket formula equals the tensorial formula on random triples") {
  Sampler rng(19);
  for (auto sig : kSigs) {
    const NearlyKahlerd nk(sig);
    for (int n = 0; n < 200; ++n) {
      const auto x = rng.tangent(), y = rng.tangent(), z = rng.tangent();
      CHECK(max_diff(nk.curvature_lie(x, y, z), nk.curvature_tensorial(x, y, z)) < 1e-12);
    }
  }
}

TEST_CASE("curvature: sum of the tensorial term groups is the tensorial curvature") {
  Sampler rng(23);
  const NearlyKahlerd nk(Signature::pseudo);
  for (int n = 0; n < 20; ++n) {
    const auto x = rng.tangent(), y = rng.tangent(), z = rng.tangent();
    TangentVectord sum = TangentVectord::Zero();
    for (const auto& t : nk.curvature_terms(x, y, z)) sum += t;
    CHECK(max_diff(sum, nk.curvature_tensorial(x, y, z)) < 1e-14);
  }
}

TEST_CASE("NearlyKahler instantiates for long double") {
  const NearlyKahler<long double> nk(Signature::riemannian);
  const auto g = nk.G(unit_m<long double>(1), unit_m<long double>(2));
  CHECK(std::abs(g(5) - 1.0L) < 1e-18L);
}
