#pragma once

// Project-wide tolerance ladder. Exact-structure checks compare quantities
// that are algebraically equal and differ only by floating point round-off;
// finite-difference checks carry discretisation error of order h^2.

namespace nkflag::tol {

inline constexpr double kStructure = 1e-13;  // basis tables, brackets
inline constexpr double kExact = 1e-12;      // tensor identities
inline constexpr double kProperty = 1e-11;   // randomized curvature properties
inline constexpr double kAlpha = 1e-9;       // constant-type identity
inline constexpr double kClosedForm = 1e-10; // closed form vs expm, metrics
inline constexpr double kAmplitude = 1e-9;   // distribution amplitudes
inline constexpr double kAlmostComplex = 1e-9;

inline constexpr double kFdStep = 1e-5;  // central differences
// Gauss curvature nests two central differences; the round-off of the
// metric is amplified by 1/h^2, so the balanced step is eps^(1/4).
inline constexpr double kCurvatureFdStep = 1e-4;
inline constexpr double kFd = 1e-5;
inline constexpr double kFrameFd = 1e-6;      // analytic vs FD frames
inline constexpr double kCurvatureFd = 1e-4;  // Gauss curvature via Christoffels

inline constexpr double kNullVector = 1e-8;   // |<X,X>| below this is null
inline constexpr double kDegenerateMetric = 1e-6;

}  // namespace nkflag::tol
