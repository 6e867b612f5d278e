#include "rot4/plane.hpp"

#include <algorithm>
#include <cmath>

#include "rot4/error.hpp"
#include "rot4/tolerances.hpp"

namespace rot4 {

Plane Plane::from_span(const Quaternion& first, const Quaternion& second) {
    const double n1 = norm(first);
    if (n1 <= tol::kAxis) {
        throw Error(ErrorCode::DegenerateAxis, "plane spanning vector is zero");
    }
    const Quaternion u = first / n1;
    const Quaternion rest = second - dot4(second, u) * u;
    const double n2 = norm(rest);
    if (n2 <= tol::kAxis * std::max(1.0, norm(second))) {
        throw Error(ErrorCode::DegenerateAxis, "plane spanning vectors are dependent");
    }
    return {u, rest / n2};
}

Matrix4 Plane::projector() const {
    Matrix4 p;
    const auto uc = u.components();
    const auto wc = w.components();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) p.m[r][c] = uc[r] * uc[c] + wc[r] * wc[c];
    return p;
}

Quaternion Plane::project(const Quaternion& x) const { return dot4(x, u) * u + dot4(x, w) * w; }

double Plane::residual(const Quaternion& x) const { return norm(x - project(x)); }

double projector_distance(const Plane& a, const Plane& b) { return max_abs_diff(a.projector(), b.projector()); }

bool same_plane(const Plane& a, const Plane& b, double eps) { return projector_distance(a, b) <= eps; }

double max_cross_dot(const Plane& a, const Plane& b) {
    return std::max({std::abs(dot4(a.u, b.u)), std::abs(dot4(a.u, b.w)), std::abs(dot4(a.w, b.u)),
                     std::abs(dot4(a.w, b.w))});
}

}  // namespace rot4

namespace rot4 {

Plane orthogonal_complement(const Plane& p) {
    const std::array<Quaternion, 4> axes{kOne, kI, kJ, kK};
    int best = 0;
    double best_norm = -1.0;
    for (int e = 0; e < 4; ++e) {
        const double n = p.residual(axes[e]);
        if (n > best_norm) {
            best_norm = n;
            best = e;
        }
    }
    const Quaternion first = axes[best] - p.project(axes[best]);
    const Quaternion u = first / norm(first);

    Quaternion second;
    double second_norm = -1.0;
    for (int e = 0; e < 4; ++e) {
        if (e == best) continue;
        Quaternion r = axes[e] - p.project(axes[e]);
        r -= dot4(r, u) * u;
        const double n = norm(r);
        if (n > second_norm) {
            second_norm = n;
            second = r;
        }
    }
    return {u, second / second_norm};
}

}  // namespace rot4
