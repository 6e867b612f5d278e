#pragma once

#include <array>

#include "rot4/quaternion.hpp"

namespace rot4 {

/// Dense 4x4 real matrix, row-major. Vectors are quaternions in the basis
/// (1, i, j, k).
struct Matrix4 {
    std::array<std::array<double, 4>, 4> m{};

    [[nodiscard]] static constexpr Matrix4 identity() {
        Matrix4 out;
        for (int r = 0; r < 4; ++r) out.m[r][r] = 1.0;
        return out;
    }
    [[nodiscard]] static constexpr Matrix4 diagonal(const std::array<double, 4>& d) {
        Matrix4 out;
        for (int r = 0; r < 4; ++r) out.m[r][r] = d[r];
        return out;
    }
    /// Matrix whose columns are the given vectors.
    [[nodiscard]] static Matrix4 from_columns(const std::array<Quaternion, 4>& cols);
    /// Matrix whose rows are the given vectors.
    [[nodiscard]] static Matrix4 from_rows(const std::array<Quaternion, 4>& rows);

    [[nodiscard]] constexpr double& operator()(int r, int c) { return m[r][c]; }
    [[nodiscard]] constexpr double operator()(int r, int c) const { return m[r][c]; }

    [[nodiscard]] Quaternion column(int c) const;
    [[nodiscard]] Quaternion row(int r) const;

    friend constexpr bool operator==(const Matrix4&, const Matrix4&) = default;
};

[[nodiscard]] Matrix4 operator*(const Matrix4& a, const Matrix4& b);
[[nodiscard]] Matrix4 operator+(const Matrix4& a, const Matrix4& b);
[[nodiscard]] Matrix4 operator-(const Matrix4& a, const Matrix4& b);
[[nodiscard]] Matrix4 operator*(double k, const Matrix4& a);

/// M * vec(x)
[[nodiscard]] Quaternion operator*(const Matrix4& a, const Quaternion& x);

[[nodiscard]] Matrix4 transpose(const Matrix4& a);

/// Determinant by LU decomposition with partial pivoting.
[[nodiscard]] double det(const Matrix4& a);

[[nodiscard]] double max_abs(const Matrix4& a);
[[nodiscard]] double max_abs_diff(const Matrix4& a, const Matrix4& b);
[[nodiscard]] double frobenius(const Matrix4& a);

}  // namespace rot4
