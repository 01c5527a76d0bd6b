#pragma once

#include "nkflag/lie_structure.hpp"
#include "nkflag/random.hpp"
#include "nkflag/report.hpp"
#include "nkflag/tolerances.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace nkflag {

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int random_samples = 1000;
  /// Tolerance for the exact-structure checks; the other rungs of the
  /// ladder are fixed in tolerances.hpp.
  double tol_exact = tol::kExact;
  BasisVariant variant = BasisVariant::standard;
};

/// One tabulated Levi-Civita value nabla_{m_i} m_j = coeff * m_k at o.
struct ConnectionEntry {
  int i;
  int j;
  int k;
  double coeff;
};

/// The 24 non-zero values of the Riemannian connection at o.
const std::array<ConnectionEntry, 24>& tabulated_connection();

/// Expected coefficient for the given signature. In su(2,1) the entries
/// landing in V1 (from V2 x V3) change sign with epsilon.
double expected_connection_coeff(const ConnectionEntry& e, Signature sig);

/// Algebra checks: basis membership, Gram matrix, coordinates, Killing form,
/// Jacobi identity, reductivity, Ad(H) action and the matrix exponential.
std::vector<CheckReport> lie_structure_suite(Signature sig, const SuiteOptions& opts = {});

/// Connection table and the nearly Kahler tensor G.
std::vector<CheckReport> connection_suite(Signature sig, const SuiteOptions& opts = {});

/// Relations among J, J1, J2, J3, the G identities, nabla J_i and the
/// constant-type identity.
std::vector<CheckReport> identity_suite(Signature sig, const SuiteOptions& opts = {});

/// Bracket curvature against the tensorial formula, plus curvature symmetries.
std::vector<CheckReport> curvature_suite(Signature sig, const SuiteOptions& opts = {});

/// All of the above for each requested signature, names prefixed by the
/// signature.
std::vector<CheckReport> verify_all(std::span<const Signature> sigs, const SuiteOptions& opts = {});

}  // namespace nkflag
