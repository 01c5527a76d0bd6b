#include "nkflag/nk_geometry.hpp"
#include "nkflag/suites.hpp"

#include <cmath>
#include <sstream>

namespace nkflag {
namespace {

using Tan = TangentVectord;

Tan m(int k) { return unit_m<double>(k); }

}  // namespace

const std::array<ConnectionEntry, 24>& tabulated_connection() {
  static const std::array<ConnectionEntry, 24> table = {{
      {1, 2, 3, 0.5},  {2, 3, 1, 0.5},  {3, 1, 2, 0.5},
      {1, 3, 2, -0.5}, {2, 1, 3, -0.5}, {3, 2, 1, -0.5},
      {1, 5, 6, 0.5},  {2, 6, 4, 0.5},  {3, 4, 5, -0.5},
      {1, 6, 5, -0.5}, {2, 4, 6, -0.5}, {3, 5, 4, 0.5},
      {4, 2, 6, 0.5},  {5, 3, 4, -0.5}, {6, 1, 5, 0.5},
      {4, 3, 5, 0.5},  {5, 1, 6, -0.5}, {6, 2, 4, -0.5},
      {4, 5, 3, -0.5}, {5, 6, 1, 0.5},  {6, 4, 2, 0.5},
      {4, 6, 2, -0.5}, {5, 4, 3, 0.5},  {6, 5, 1, -0.5},
  }};
  return table;
}

double expected_connection_coeff(const ConnectionEntry& e, Signature sig) {
  const bool lands_in_v1 = e.k == 1 || e.k == 4;
  return lands_in_v1 ? e.coeff * epsilon(sig) : e.coeff;
}

std::vector<CheckReport> connection_suite(Signature sig, const SuiteOptions& opts) {
  const NearlyKahlerd nk(sig, opts.variant);
  Sampler rng(opts.seed + 1);
  std::vector<CheckReport> out;
  const double tol_exact = opts.tol_exact;

  {
    CheckAccumulator acc("connection.tabulated_entries", tol::kStructure);
    std::array<std::array<bool, 6>, 6> listed{};
    for (const auto& e : tabulated_connection()) {
      listed[static_cast<std::size_t>(e.i - 1)][static_cast<std::size_t>(e.j - 1)] = true;
      const Tan expected = expected_connection_coeff(e, sig) * m(e.k);
      acc.add(max_abs(nk.nabla(m(e.i), m(e.j)) - expected));
    }
    out.push_back(acc.finish());

    CheckAccumulator zero("connection.untabulated_vanish", tol::kStructure);
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        if (!listed[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]) {
          zero.add(max_abs(nk.nabla(m(i), m(j))));
        }
    out.push_back(zero.finish());
  }
  out.push_back(make_report("G.m1_m2_equals_m6", max_abs(nk.G(m(1), m(2)) - m(6)), 1, tol::kStructure));
  {
    CheckAccumulator acc("G.skew_on_basis", tol_exact);
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j) acc.add(max_abs(nk.G(m(i), m(j)) + nk.G(m(j), m(i))));
    out.push_back(acc.finish());
  }
  {
    CheckAccumulator diag("G.vanishes_on_diagonal", tol_exact);
    CheckAccumulator ortho("G.orthogonal_to_arguments", tol_exact);
    CheckAccumulator anti("G.anticommutes_with_J", tol_exact);
    for (int s = 0; s < opts.random_samples; ++s) {
      const Tan x = rng.tangent(), y = rng.tangent();
      diag.add(max_abs(nk.G(x, x)));
      const Tan gxy = nk.G(x, y);
      ortho.add(nk.metric(gxy, x));
      ortho.add(nk.metric(gxy, y));
      anti.add(max_abs(nk.G(x, nk.J(y)) + nk.J(gxy)));
    }
    out.push_back(diag.finish());
    out.push_back(ortho.finish());
    out.push_back(anti.finish());
  }
  return out;
}

std::vector<CheckReport> identity_suite(Signature sig, const SuiteOptions& opts) {
  const NearlyKahlerd nk(sig, opts.variant);
  Sampler rng(opts.seed + 2);
  std::vector<CheckReport> out;
  const double tol_exact = opts.tol_exact;
  using Endo = Endomorphism6<double>;
  const Endo& J = nk.acs(AcsKind::J);
  const Endo& J1 = nk.acs(AcsKind::J1);
  const Endo& J2 = nk.acs(AcsKind::J2);
  const Endo& J3 = nk.acs(AcsKind::J3);
  const Endo id = Endo::Identity();

  {
    CheckAccumulator acc("acs.square_minus_identity", tol_exact);
    for (AcsKind k : kAllAcs) acc.add(max_abs(Endo(nk.acs(k) * nk.acs(k) + id)));
    out.push_back(acc.finish());
  }
  {
    CheckAccumulator acc("acs.pairwise_commute", tol_exact);
    for (AcsKind a : kAllAcs)
      for (AcsKind b : kAllAcs) acc.add(max_abs(Endo(nk.acs(a) * nk.acs(b) - nk.acs(b) * nk.acs(a))));
    out.push_back(acc.finish());
  }
  out.push_back(make_report("acs.J_is_minus_sum", max_abs(Endo(J + J1 + J2 + J3)), 36, tol_exact));
  out.push_back(make_report("acs.J_is_minus_product", max_abs(Endo(J + J1 * J2 * J3)), 36, tol_exact));
  {
    // J = J_i on one distribution and -J_i on the other two.
    CheckAccumulator acc("acs.distribution_relations", tol_exact);
    const std::array<std::pair<const Endo*, int>, 3> same = {{{&J1, 1}, {&J2, 3}, {&J3, 2}}};
    for (const auto& [ji, keep] : same) {
      for (int k = 1; k <= 3; ++k) {
        for (int c : {k, k + 3}) {
          const Tan v = m(c);
          const double sign = k == keep ? 1.0 : -1.0;
          acc.add(max_abs(Tan(J * v - sign * (*ji) * v)));
        }
      }
    }
    out.push_back(acc.finish());
  }
  {
    CheckAccumulator acc("acs.metric_family_compatible", tol_exact);
    for (int s = 0; s < opts.random_samples; ++s) {
      const MetricParams p(rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0));
      const Tan x = rng.tangent(), y = rng.tangent();
      const double base = metric_family(p, x, y, sig);
      for (AcsKind k : kAllAcs) {
        acc.add(metric_family(p, apply_acs(k, x), apply_acs(k, y), sig) - base);
      }
    }
    out.push_back(acc.finish());
  }

  std::array<CheckAccumulator, 3> jig = {CheckAccumulator("G.J1_compatibility", tol_exact),
                                         CheckAccumulator("G.J2_compatibility", tol_exact),
                                         CheckAccumulator("G.J3_compatibility", tol_exact)};
  std::array<CheckAccumulator, 3> nablaj = {CheckAccumulator("nabla_J1.closed_form", tol_exact),
                                            CheckAccumulator("nabla_J2.closed_form", tol_exact),
                                            CheckAccumulator("nabla_J3.closed_form", tol_exact)};
  CheckAccumulator sum("G.three_structure_sum", tol_exact);
  CheckAccumulator alpha("G.constant_type_alpha_1", tol::kAlpha);

  auto run_pair = [&](const Tan& x, const Tan& y, bool random) {
    const Tan gxy = nk.G(x, y);
    for (int i = 1; i <= 3; ++i) {
      const Endo& ji = nk.acs(partial_acs(i));
      const Tan lhs = ji * gxy;
      const Tan rhs = nk.G(ji * x, y) + nk.G(x, ji * y) + nk.G(x, J * y);
      jig[static_cast<std::size_t>(i - 1)].add(max_abs(lhs - rhs));
      nablaj[static_cast<std::size_t>(i - 1)].add(max_abs(nk.nabla_J(i, x, y) - nk.nabla_J_closed(i, x, y)));
    }
    sum.add(max_abs(Tan(nk.G(x, J1 * y) + nk.G(x, J2 * y) + nk.G(x, J3 * y) - nk.G(J1 * x, y) -
                        nk.G(J2 * x, y) - nk.G(J3 * x, y))));
    if (random) {
      const double gram = nk.metric(x, x) * nk.metric(y, y) - std::pow(nk.metric(x, y), 2) -
                          std::pow(nk.metric(x, nk.J(y)), 2);
      alpha.add(nk.metric(gxy, gxy) - gram);
    }
  };
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) run_pair(m(i), m(j), false);
  for (int s = 0; s < opts.random_samples; ++s) run_pair(rng.tangent(), rng.tangent(), true);
  // the basis pair used as the normalisation witness
  run_pair(m(1), m(2), true);

  for (auto& a : jig) out.push_back(a.finish());
  out.push_back(sum.finish());
  for (auto& a : nablaj) out.push_back(a.finish());
  out.push_back(alpha.finish());
  return out;
}

std::vector<CheckReport> curvature_suite(Signature sig, const SuiteOptions& opts) {
  const NearlyKahlerd nk(sig, opts.variant);
  Sampler rng(opts.seed + 3);
  std::vector<CheckReport> out;

  {
    CheckAccumulator acc("curvature.bracket_vs_tensorial_basis", opts.tol_exact);
    double worst = -1.0;
    std::string worst_note;
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        for (int k = 1; k <= 6; ++k) {
          const Tan lie = nk.curvature_lie(m(i), m(j), m(k));
          const auto terms = nk.curvature_terms(m(i), m(j), m(k));
          const Tan ten = terms[0] + terms[1] + terms[2] + terms[3] + terms[4];
          const double err = max_abs(lie - ten);
          acc.add(err);
          if (err > worst) {
            worst = err;
            std::ostringstream os;
            os << "worst triple (m" << i << ",m" << j << ",m" << k << "); term norms [const,J,J1,J2,J3] = [";
            for (std::size_t t = 0; t < terms.size(); ++t) os << (t ? "," : "") << terms[t].cwiseAbs().maxCoeff();
            os << "]";
            worst_note = os.str();
          }
        }
    if (worst > opts.tol_exact) acc.set_note(worst_note);
    out.push_back(acc.finish());
  }

  CheckAccumulator random_eq("curvature.bracket_vs_tensorial_random", tol::kProperty);
  CheckAccumulator skew("curvature.skew_first_pair", tol::kProperty);
  CheckAccumulator bianchi("curvature.first_bianchi", tol::kProperty);
  CheckAccumulator pair("curvature.pair_symmetry", tol::kProperty);
  CheckAccumulator compat("curvature.metric_compatibility", tol::kProperty);
  for (int s = 0; s < opts.random_samples; ++s) {
    const Tan x = rng.tangent(), y = rng.tangent(), z = rng.tangent(), w = rng.tangent();
    const Tan rxyz = nk.curvature_tensorial(x, y, z);
    random_eq.add(max_abs(rxyz - nk.curvature_lie(x, y, z)));
    skew.add(max_abs(Tan(rxyz + nk.curvature_tensorial(y, x, z))));
    bianchi.add(max_abs(Tan(rxyz + nk.curvature_tensorial(y, z, x) + nk.curvature_tensorial(z, x, y))));
    pair.add(nk.metric(rxyz, w) - nk.metric(nk.curvature_tensorial(z, w, x), y));
    compat.add(nk.metric(rxyz, w) + nk.metric(nk.curvature_tensorial(x, y, w), z));
  }
  out.push_back(random_eq.finish());
  out.push_back(skew.finish());
  out.push_back(bianchi.finish());
  out.push_back(pair.finish());
  out.push_back(compat.finish());

  {
    // Holomorphic sectional curvature of V1 (and of V2 in su(2,1)) is 4.
    CheckAccumulator acc("curvature.holomorphic_single_distribution", opts.tol_exact);
    acc.add(nk.metric(nk.curvature_tensorial(m(1), m(4), m(4)), m(1)) - 4.0);
    acc.add(nk.metric(nk.curvature_tensorial(m(2), m(5), m(5)), m(2)) / (nk.metric(m(2), m(2)) * nk.metric(m(5), m(5))) - 4.0);
    out.push_back(acc.finish());
  }
  return out;
}

std::vector<CheckReport> verify_all(std::span<const Signature> sigs, const SuiteOptions& opts) {
  std::vector<CheckReport> all;
  for (Signature sig : sigs) {
    const std::string prefix = std::string(to_string(sig)) + "/";
    for (auto suite : {lie_structure_suite, connection_suite, identity_suite, curvature_suite}) {
      for (auto& r : suite(sig, opts)) {
        r.name = prefix + r.name;
        all.push_back(std::move(r));
      }
    }
  }
  return all;
}

}  // namespace nkflag
