#include "rot4/quaternion.hpp"

#include <algorithm>
#include <numbers>

#include "rot4/error.hpp"
#include "rot4/tolerances.hpp"

namespace rot4 {

Vec3 Vec3::checked(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw Error(ErrorCode::NonFinite, "vector component is NaN or infinite");
    }
    return {a, b, c};
}

Quaternion Quaternion::checked(const std::array<double, 4>& c) {
    for (double x : c) {
        if (!std::isfinite(x)) {
            throw Error(ErrorCode::NonFinite, "quaternion component is NaN or infinite");
        }
    }
    return from_components(c);
}

Quaternion normalized(const Quaternion& x) {
    const double n = norm(x);
    if (n == 0.0) {
        throw Error(ErrorCode::NotUnit, "cannot normalize the zero quaternion");
    }
    return x / n;
}

double max_abs_diff(const Quaternion& x, const Quaternion& y) {
    double m = 0.0;
    for (int c = 0; c < 4; ++c) {
        m = std::max(m, std::abs(x[c] - y[c]));
    }
    return m;
}

double max_abs_diff_up_to_sign(const Quaternion& x, const Quaternion& y) {
    return std::min(max_abs_diff(x, y), max_abs_diff(x, -y));
}

Quaternion PolarForm::reconstruct() const {
    return {std::cos(half_angle), axis * std::sin(half_angle)};
}

PolarForm polar(const Quaternion& a) {
    if (!is_unit(a, tol::kUnit)) {
        throw Error(ErrorCode::NotUnit, "polar form needs a unit quaternion");
    }
    const double vn = norm(a.v);
    PolarForm out;
    if (vn <= tol::kAxis) {
        out.half_angle = a.s > 0.0 ? 0.0 : std::numbers::pi;
        out.axis = {1.0, 0.0, 0.0};
        out.axis_degenerate = true;
        return out;
    }
    out.half_angle = std::atan2(vn, a.s);
    out.axis = a.v / vn;
    return out;
}

Vec3 gibbs_from_unit(const Quaternion& a) {
    if (std::abs(a.s) <= tol::kGibbs) {
        throw Error(ErrorCode::GibbsSingular, "scalar part vanishes (half-angle pi/2)");
    }
    return a.v / a.s;
}

Quaternion unit_from_gibbs(const Vec3& g) {
    const double scale = 1.0 / std::sqrt(1.0 + dot(g, g));
    return {scale, g * scale};
}

Vec3 rodrigues_compose(const Vec3& g1, const Vec3& g2) {
    const double denom = 1.0 - dot(g2, g1);
    if (std::abs(denom) <= tol::kGibbs) {
        throw Error(ErrorCode::GibbsSingular, "composed 3D rotation has angle pi");
    }
    return (g2 + g1 + cross(g2, g1)) / denom;
}

}  // namespace rot4
