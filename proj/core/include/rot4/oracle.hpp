#pragma once

/**
 * Matrix-side ground truth for rotations of E^4.
 *
 * Nothing here uses the quaternion closed forms for planes and angles: the
 * invariant planes are read off the eigenspaces of M + M^T (which acts as
 * 2 cos(theta) on a plane turned through theta) and the angles are measured
 * inside each recovered plane. The rest of the library is checked against
 * this module, so it deliberately depends only on Matrix4 and Plane.
 */

#include <array>

#include "rot4/matrix4.hpp"
#include "rot4/plane.hpp"
#include "rot4/quaternion.hpp"

namespace rot4::oracle {

/// Matrix of x -> a x.
[[nodiscard]] Matrix4 left_mult_matrix(const Quaternion& a);

/// Matrix of x -> x b.
[[nodiscard]] Matrix4 right_mult_matrix(const Quaternion& b);

struct EigenDecomposition {
    std::array<double, 4> values{};  // descending
    Matrix4 vectors;                 // column c pairs with values[c]
};

inline constexpr int kMaxJacobiSweeps = 30;
inline constexpr double kJacobiOffDiagonal = 1e-13;

/// Cyclic Jacobi eigen-solver for a symmetric 4x4 matrix.
/// Throws NoConvergence if the input is not symmetric to 1e-12 or the sweep
/// budget runs out.
[[nodiscard]] EigenDecomposition symmetric_eigen4(const Matrix4& s);

struct OraclePlanes {
    // plane1 carries the smaller rotation angle.
    Plane plane1;
    double angle1 = 0.0;
    Plane plane2;
    double angle2 = 0.0;
    // Both angles agree: every plane Sp{x, Mx} is invariant and the reported
    // pair is one choice among infinitely many.
    bool isoclinic = false;
};

/// Invariant planes and unsigned angles of a rotation matrix. Throws
/// PairingFailure when the spectrum of M + M^T does not split into two
/// near-equal pairs within eps.
[[nodiscard]] OraclePlanes planes_from_matrix(const Matrix4& m, double eps);

}  // namespace rot4::oracle
