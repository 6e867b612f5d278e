#pragma once

namespace rot4::tol {

// Pure algebraic identities (exact up to rounding).
inline constexpr double kAlg = 1e-12;
// Admission of user-supplied unit quaternions.
inline constexpr double kUnit = 1e-9;
// A vector part at or below this magnitude is treated as zero (quaternion = ±1).
inline constexpr double kAxis = 1e-9;
// Smallest admissible |cos| / denominator in the Gibbs chart.
inline constexpr double kGibbs = 1e-9;
// Projector max-abs distance under which two planes are considered equal.
inline constexpr double kPlane = 1e-8;
// Residual allowed when checking that a rotation fixes or preserves something.
inline constexpr double kApply = 1e-9;
// Default threshold for classification and the simplicity test.
inline constexpr double kClassify = 1e-8;
// Pivot threshold for the small Gaussian eliminations.
inline constexpr double kPivot = 1e-10;

}  // namespace rot4::tol
