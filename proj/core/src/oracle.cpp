#include "rot4/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rot4/error.hpp"

namespace rot4::oracle {

Matrix4 left_mult_matrix(const Quaternion& a) {
    const double s = a.s, x = a.v.x1, y = a.v.x2, z = a.v.x3;
    Matrix4 out;
    out.m = {{{s, -x, -y, -z},  //
              {x, s, -z, y},
              {y, z, s, -x},
              {z, -y, x, s}}};
    return out;
}

Matrix4 right_mult_matrix(const Quaternion& b) {
    const double s = b.s, x = b.v.x1, y = b.v.x2, z = b.v.x3;
    Matrix4 out;
    out.m = {{{s, -x, -y, -z},  //
              {x, s, z, -y},
              {y, -z, s, x},
              {z, y, -x, s}}};
    return out;
}

namespace {

double off_diagonal_norm(const Matrix4& a) {
    double acc = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (r != c) acc += a.m[r][c] * a.m[r][c];
    return std::sqrt(acc);
}

}  // namespace

EigenDecomposition symmetric_eigen4(const Matrix4& s) {
    if (max_abs_diff(s, transpose(s)) > 1e-12) {
        throw Error(ErrorCode::NoConvergence, "eigen-solver input is not symmetric");
    }
    Matrix4 a = s;
    Matrix4 v = Matrix4::identity();
    const double target = kJacobiOffDiagonal * std::max(1.0, frobenius(s));

    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > kMaxJacobiSweeps) {
            throw Error(ErrorCode::NoConvergence, "Jacobi sweep budget exhausted");
        }
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double apq = a.m[p][q];
                if (apq == 0.0) continue;
                // Rotation angle that annihilates a(p,q).
                const double theta = (a.m[q][q] - a.m[p][p]) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a.m[k][p];
                    const double akq = a.m[k][q];
                    a.m[k][p] = c * akp - sn * akq;
                    a.m[k][q] = sn * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a.m[p][k];
                    const double aqk = a.m[q][k];
                    a.m[p][k] = c * apk - sn * aqk;
                    a.m[q][k] = sn * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = v.m[k][p];
                    const double vkq = v.m[k][q];
                    v.m[k][p] = c * vkp - sn * vkq;
                    v.m[k][q] = sn * vkp + c * vkq;
                }
            }
        }
    }

    std::array<int, 4> order{};
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return a.m[l][l] > a.m[r][r]; });

    EigenDecomposition out;
    for (int c = 0; c < 4; ++c) {
        out.values[c] = a.m[order[c]][order[c]];
        for (int r = 0; r < 4; ++r) out.vectors.m[r][c] = v.m[r][order[c]];
    }
    return out;
}

namespace {

// Unsigned turning angle of M inside an invariant plane, from cos and sin
// measured in the plane's own basis.
double in_plane_angle(const Matrix4& m, const Plane& p) {
    const Quaternion mu = m * p.u;
    const Quaternion mw = m * p.w;
    const double c = 0.5 * (dot4(mu, p.u) + dot4(mw, p.w));
    const double s = 0.5 * (dot4(mu, p.w) - dot4(mw, p.u));
    return std::atan2(std::abs(s), c);
}

}  // namespace

OraclePlanes planes_from_matrix(const Matrix4& m, double eps) {
    const EigenDecomposition eig = symmetric_eigen4(m + transpose(m));
    const auto& lam = eig.values;
    if (std::abs(lam[0] - lam[1]) > eps || std::abs(lam[2] - lam[3]) > eps) {
        throw Error(ErrorCode::PairingFailure, "eigenvalues of M + M^T do not form two pairs");
    }

    OraclePlanes out;
    out.isoclinic = std::abs(lam[0] - lam[3]) <= eps;
    if (!out.isoclinic) {
        out.plane1 = Plane{eig.vectors.column(0), eig.vectors.column(1)};
        out.plane2 = Plane{eig.vectors.column(2), eig.vectors.column(3)};
    } else {
        // Any eigen-split is admissible for S but not necessarily M-invariant;
        // Sp{x, Mx} always is, and so is its complement.
        const Quaternion x = eig.vectors.column(0);
        const Quaternion mx = m * x;
        const Quaternion rest = mx - dot4(mx, x) * x;
        if (norm(rest) > 1e-6) {
            out.plane1 = Plane::from_span(x, rest);
        } else {
            out.plane1 = Plane{x, eig.vectors.column(1)};
        }
        out.plane2 = orthogonal_complement(out.plane1);
    }
    out.angle1 = in_plane_angle(m, out.plane1);
    out.angle2 = in_plane_angle(m, out.plane2);
    if (out.angle1 > out.angle2) {
        std::swap(out.plane1, out.plane2);
        std::swap(out.angle1, out.angle2);
    }
    return out;
}

}  // namespace rot4::oracle
