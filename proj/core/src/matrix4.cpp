#include "rot4/matrix4.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace rot4 {

Matrix4 Matrix4::from_columns(const std::array<Quaternion, 4>& cols) {
    Matrix4 out;
    for (int c = 0; c < 4; ++c) {
        for (int r = 0; r < 4; ++r) out.m[r][c] = cols[c][r];
    }
    return out;
}

Matrix4 Matrix4::from_rows(const std::array<Quaternion, 4>& rows) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r) out.m[r] = rows[r].components();
    return out;
}

Quaternion Matrix4::column(int c) const { return {m[0][c], m[1][c], m[2][c], m[3][c]}; }

Quaternion Matrix4::row(int r) const { return Quaternion::from_components(m[r]); }

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += a.m[r][k] * b.m[k][c];
            out.m[r][c] = acc;
        }
    }
    return out;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.m[r][c] = a.m[r][c] + b.m[r][c];
    return out;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.m[r][c] = a.m[r][c] - b.m[r][c];
    return out;
}

Matrix4 operator*(double k, const Matrix4& a) {
    Matrix4 out = a;
    for (auto& row : out.m)
        for (double& x : row) x *= k;
    return out;
}

Quaternion operator*(const Matrix4& a, const Quaternion& x) {
    std::array<double, 4> out{};
    const auto in = x.components();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out[r] += a.m[r][c] * in[c];
    }
    return Quaternion::from_components(out);
}

Matrix4 transpose(const Matrix4& a) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.m[c][r] = a.m[r][c];
    return out;
}

double det(const Matrix4& a) {
    auto lu = a.m;
    double d = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r) {
            if (std::abs(lu[r][col]) > std::abs(lu[piv][col])) piv = r;
        }
        if (lu[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(lu[piv], lu[col]);
            d = -d;
        }
        d *= lu[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const double f = lu[r][col] / lu[col][col];
            for (int c = col; c < 4; ++c) lu[r][c] -= f * lu[col][c];
        }
    }
    return d;
}

double max_abs(const Matrix4& a) {
    double out = 0.0;
    for (const auto& row : a.m)
        for (double x : row) out = std::max(out, std::abs(x));
    return out;
}

double max_abs_diff(const Matrix4& a, const Matrix4& b) { return max_abs(a - b); }

double frobenius(const Matrix4& a) {
    double acc = 0.0;
    for (const auto& row : a.m)
        for (double x : row) acc += x * x;
    return std::sqrt(acc);
}

}  // namespace rot4
