#pragma once

// Test-only reference implementations. None of these call into the library
// routine they are used to check.

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "rot4/matrix4.hpp"
#include "rot4/plane.hpp"
#include "rot4/quaternion.hpp"

namespace rot4::testing {

inline constexpr double kSqrtHalf = 0.70710678118654752440;

/// Quaternion product from the basis multiplication table
/// (i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j), summed term by term.
inline Quaternion table_mul(const Quaternion& x, const Quaternion& y) {
    // kProd[r][c] = (sign, index) of e_r * e_c with e = (1, i, j, k).
    static constexpr int kIndex[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::array<double, 4> out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[kIndex[r][c]] += kSign[r][c] * x[r] * y[c];
    return Quaternion::from_components(out);
}

/// Leibniz determinant: sum over the 24 permutations.
inline double leibniz_det(const Matrix4& m) {
    std::array<int, 4> perm{0, 1, 2, 3};
    double total = 0.0;
    do {
        int inversions = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (perm[a] > perm[b]) ++inversions;
        double term = (inversions % 2 == 0) ? 1.0 : -1.0;
        for (int r = 0; r < 4; ++r) term *= m.m[r][perm[r]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Projector u u^T + w w^T of the span of two (not necessarily orthonormal)
/// vectors, via the Gram matrix inverse: P = B (B^T B)^-1 B^T.
inline Matrix4 span_projector(const Quaternion& x, const Quaternion& y) {
    const double g11 = dot4(x, x), g12 = dot4(x, y), g22 = dot4(y, y);
    const double d = g11 * g22 - g12 * g12;
    const double i11 = g22 / d, i12 = -g12 / d, i22 = g11 / d;
    Matrix4 p;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            p.m[r][c] = x[r] * (i11 * x[c] + i12 * y[c]) + y[r] * (i12 * x[c] + i22 * y[c]);
    return p;
}

inline double projector_gap(const Plane& p, const Quaternion& x, const Quaternion& y) {
    return max_abs_diff(p.projector(), span_projector(x, y));
}

/// Unsigned angle between two vectors.
inline double angle_between(const Quaternion& x, const Quaternion& y) {
    const double c = dot4(x, y) / (norm(x) * norm(y));
    const Quaternion perp = y / norm(y) - c * (x / norm(x));
    return std::atan2(norm(perp), c);
}

inline void expect_quat_near(const Quaternion& actual, const Quaternion& expected, double tol) {
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(actual[c], expected[c], tol) << "component " << c;
}

inline void expect_vec_near(const Vec3& actual, const Vec3& expected, double tol) {
    EXPECT_NEAR(actual.x1, expected.x1, tol);
    EXPECT_NEAR(actual.x2, expected.x2, tol);
    EXPECT_NEAR(actual.x3, expected.x3, tol);
}

}  // namespace rot4::testing
