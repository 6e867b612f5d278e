#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <variant>

#include "rot4/error.hpp"
#include "rot4/oracle.hpp"
#include "rot4/random.hpp"
#include "rot4/rotation4.hpp"
#include "support/test_support.hpp"

namespace rot4 {
namespace {

using oracle::left_mult_matrix;
using oracle::planes_from_matrix;
using oracle::right_mult_matrix;
using oracle::symmetric_eigen4;
using testing::expect_quat_near;
using testing::projector_gap;
using testing::table_mul;

constexpr double kPi = std::numbers::pi;

Quaternion random_point(Sampler& s) { return {s.gaussian(), s.gaussian(), s.gaussian(), s.gaussian()}; }

Rotation4 from_parameters(double alpha, const Vec3& p, double beta, const Vec3& q) {
    return {Quaternion(std::cos(alpha), p * std::sin(alpha)), Quaternion(std::cos(beta), q * std::sin(beta))};
}

TEST(MultMatrices, MatchTableProduct) {
    Sampler s(51);
    for (int n = 0; n < 500; ++n) {
        const Quaternion a = random_point(s);
        const Quaternion x = random_point(s);
        expect_quat_near(left_mult_matrix(a) * x, table_mul(a, x), 1e-13);
        expect_quat_near(right_mult_matrix(a) * x, table_mul(x, a), 1e-13);
    }
}

TEST(MultMatrices, LeftAndRightCommute) {
    Sampler s(52);
    for (int n = 0; n < 200; ++n) {
        const Matrix4 l = left_mult_matrix(random_point(s));
        const Matrix4 r = right_mult_matrix(random_point(s));
        EXPECT_LE(max_abs_diff(l * r, r * l), 1e-12);
    }
}

TEST(MultMatrices, UnitFactorsAreOrthogonal) {
    Sampler s(53);
    const Quaternion a = s.unit_quaternion();
    EXPECT_LE(max_abs_diff(transpose(left_mult_matrix(a)) * left_mult_matrix(a), Matrix4::identity()), 1e-15);
    EXPECT_LE(max_abs_diff(transpose(right_mult_matrix(a)), right_mult_matrix(conj(a))), 0.0);
}

TEST(SymmetricEigen, IdentityAndDiagonal) {
    const auto id = symmetric_eigen4(Matrix4::identity());
    for (double v : id.values) EXPECT_EQ(v, 1.0);

    const auto d = symmetric_eigen4(Matrix4::diagonal({3.0, -1.0, 7.0, 0.5}));
    EXPECT_EQ(d.values[0], 7.0);
    EXPECT_EQ(d.values[1], 3.0);
    EXPECT_EQ(d.values[2], 0.5);
    EXPECT_EQ(d.values[3], -1.0);
    expect_quat_near(d.vectors.column(0), kJ, 0.0);
}

TEST(SymmetricEigen, ReconstructsRandomMatrices) {
    Sampler s(54);
    for (int n = 0; n < 500; ++n) {
        Matrix4 a;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c <= r; ++c) a.m[r][c] = a.m[c][r] = s.gaussian();
        const auto e = symmetric_eigen4(a);
        for (int c = 1; c < 4; ++c) EXPECT_GE(e.values[c - 1], e.values[c]);
        const Matrix4 back = e.vectors * Matrix4::diagonal(e.values) * transpose(e.vectors);
        EXPECT_LE(max_abs_diff(back, a), 1e-12);
        EXPECT_LE(max_abs_diff(transpose(e.vectors) * e.vectors, Matrix4::identity()), 1e-12);
    }
}

TEST(SymmetricEigen, RejectsAsymmetricInput) {
    Matrix4 a = Matrix4::identity();
    a.m[0][1] = 1.0;
    try {
        (void)symmetric_eigen4(a);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
    }
}

TEST(PlanesFromMatrix, Identity) {
    const auto op = planes_from_matrix(Matrix4::identity(), 1e-8);
    EXPECT_TRUE(op.isoclinic);
    EXPECT_EQ(op.angle1, 0.0);
    EXPECT_EQ(op.angle2, 0.0);
}

TEST(PlanesFromMatrix, WorkedComposite) {
    // (1+i+j-k)/2 x (1+i+j+k)/2 turns one plane by 2pi/3 and fixes another.
    const Rotation4 h{Quaternion(0.5, 0.5, 0.5, -0.5), Quaternion(0.5, 0.5, 0.5, 0.5)};
    const auto op = planes_from_matrix(to_matrix(h), 1e-8);
    EXPECT_FALSE(op.isoclinic);
    EXPECT_NEAR(op.angle1, 0.0, 1e-14);
    EXPECT_NEAR(op.angle2, 2 * kPi / 3, 1e-14);
    // fixed plane: h(k) = k and h(1 + i - j) = 1 + i - j
    EXPECT_LE(projector_gap(op.plane1, kK, Quaternion(1, 1, -1, 0)), 1e-12);
}

TEST(PlanesFromMatrix, CoordinatePlaneRotation) {
    // Turn Sp{1, i} by 0.3 and Sp{j, k} by 1.2.
    Matrix4 m = Matrix4::identity();
    m.m[0][0] = m.m[1][1] = std::cos(0.3);
    m.m[1][0] = std::sin(0.3);
    m.m[0][1] = -std::sin(0.3);
    m.m[2][2] = m.m[3][3] = std::cos(1.2);
    m.m[3][2] = std::sin(1.2);
    m.m[2][3] = -std::sin(1.2);
    const auto op = planes_from_matrix(m, 1e-8);
    EXPECT_NEAR(op.angle1, 0.3, 1e-14);
    EXPECT_NEAR(op.angle2, 1.2, 1e-14);
    EXPECT_LE(projector_gap(op.plane1, kOne, kI), 1e-14);
    EXPECT_LE(projector_gap(op.plane2, kJ, kK), 1e-14);
}

TEST(PlanesFromMatrix, KnownDoubleRotations) {
    Sampler s(55);
    int checked = 0;
    while (checked < 500) {
        const double alpha = s.uniform(0.0, kPi);
        const double beta = s.uniform(0.0, kPi);
        const Vec3 p = s.unit_vec3();
        const Vec3 q = s.unit_vec3();
        const double sum = reduce_angle(alpha + beta);
        const double diff = reduce_angle(alpha - beta);
        if (std::abs(std::cos(sum) - std::cos(diff)) < 1e-3) continue;
        const Rotation4 r = from_parameters(alpha, p, beta, q);
        const auto op = planes_from_matrix(to_matrix(r), 1e-8);
        EXPECT_FALSE(op.isoclinic);
        EXPECT_NEAR(op.angle1, std::min(sum, diff), 1e-10);
        EXPECT_NEAR(op.angle2, std::max(sum, diff), 1e-10);
        // Each plane is invariant under the matrix.
        for (const Plane& pl : {op.plane1, op.plane2}) {
            EXPECT_LE(pl.residual(apply(r, pl.u)), 1e-10);
            EXPECT_LE(pl.residual(apply(r, pl.w)), 1e-10);
        }
        ++checked;
    }
}

TEST(PlanesFromMatrix, IsoclinicPlanesAreInvariant) {
    Sampler s(56);
    for (int n = 0; n < 200; ++n) {
        const Rotation4 r = (n % 2 == 0) ? s.left_isoclinic() : s.right_isoclinic();
        const auto op = planes_from_matrix(to_matrix(r), 1e-8);
        EXPECT_TRUE(op.isoclinic);
        EXPECT_NEAR(op.angle1, op.angle2, 1e-10);
        EXPECT_LE(max_cross_dot(op.plane1, op.plane2), 1e-10);
        for (const Plane& pl : {op.plane1, op.plane2}) {
            EXPECT_LE(pl.residual(apply(r, pl.u)), 1e-10);
            EXPECT_LE(pl.residual(apply(r, pl.w)), 1e-10);
        }
    }
}

TEST(PlanesFromMatrix, ReflectionHasNoPairing) {
    try {
        (void)planes_from_matrix(Matrix4::diagonal({1.0, 1.0, 1.0, -1.0}), 1e-8);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PairingFailure);
    }
}

}  // namespace
}  // namespace rot4
