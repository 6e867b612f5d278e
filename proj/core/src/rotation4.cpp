#include "rot4/rotation4.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rot4/error.hpp"
#include "rot4/linalg.hpp"
#include "rot4/oracle.hpp"

namespace rot4 {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_real_unit(const Quaternion& x) { return norm(x.v) <= tol::kAxis; }

// Sign that makes the first component of magnitude > kAxis positive.
double canonical_sign(const Quaternion& a) {
    for (int c = 0; c < 4; ++c) {
        if (std::abs(a[c]) > tol::kAxis) return a[c] > 0.0 ? 1.0 : -1.0;
    }
    return 1.0;
}

// Unit pure quaternions orthogonal to p: the complement of Sp{1, p}.
Plane pure_complement(const Vec3& p) {
    const std::array<Vec3, 3> axes{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    const std::array<double, 3> mag{std::abs(p.x1), std::abs(p.x2), std::abs(p.x3)};
    const auto e = static_cast<std::size_t>(std::min_element(mag.begin(), mag.end()) - mag.begin());
    const Vec3 r = axes[e] - dot(axes[e], p) * p;
    const Vec3 u = r / norm(r);
    return {Quaternion::pure(u), Quaternion::pure(cross(p, u))};
}

Plane oriented(const Rotation4& r, const Plane& plane, double angle) {
    if (angle <= tol::kAxis) return plane;
    return dot4(apply(r, plane.u), plane.w) < 0.0 ? plane.flipped() : plane;
}

void require_unit(const Rotation4& r) {
    if (!is_unit(r.a(), tol::kUnit) || !is_unit(r.b(), tol::kUnit)) {
        throw Error(ErrorCode::NotUnit, "rotation factors are not unit quaternions");
    }
}

}  // namespace

Rotation4::Rotation4(const Quaternion& a, const Quaternion& b) {
    if (!is_unit(a, tol::kUnit) || !is_unit(b, tol::kUnit)) {
        throw Error(ErrorCode::NotUnit, "rotation factors must be unit quaternions");
    }
    const double sign = canonical_sign(a);
    a_ = sign * a;
    b_ = sign * b;
}

double factor_distance(const Rotation4& r1, const Rotation4& r2) {
    const double same = std::max(max_abs_diff(r1.a(), r2.a()), max_abs_diff(r1.b(), r2.b()));
    const double flip = std::max(max_abs_diff(r1.a(), -r2.a()), max_abs_diff(r1.b(), -r2.b()));
    return std::min(same, flip);
}

ReflectionNormal::ReflectionNormal(const Quaternion& y) : y_(y) {
    if (!is_unit(y, tol::kUnit)) {
        throw Error(ErrorCode::NotUnit, "reflection normal must be a unit quaternion");
    }
}

std::string_view kind_name(const RotationKind& k) {
    struct Visitor {
        std::string_view operator()(const kind::Identity&) const { return "Identity"; }
        std::string_view operator()(const kind::Simple&) const { return "Simple"; }
        std::string_view operator()(const kind::LeftIsoclinic&) const { return "LeftIsoclinic"; }
        std::string_view operator()(const kind::RightIsoclinic&) const { return "RightIsoclinic"; }
        std::string_view operator()(const kind::Double&) const { return "Double"; }
    };
    return std::visit(Visitor{}, k);
}

Quaternion apply(const Rotation4& r, const Quaternion& x) { return mul(mul(r.a(), x), r.b()); }

Quaternion reflect(const ReflectionNormal& y, const Quaternion& x) {
    return -mul(mul(y.y(), conj(x)), y.y());
}

Rotation4 from_reflections(const ReflectionNormal& y, const ReflectionNormal& z) {
    return {mul(z.y(), conj(y.y())), mul(conj(y.y()), z.y())};
}

double reduce_angle(double theta) {
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return t > kPi ? 2.0 * kPi - t : t;
}

InvariantPlanes invariant_planes(const Vec3& p, const Vec3& q) {
    if (std::abs(norm(p) - 1.0) > tol::kUnit || std::abs(norm(q) - 1.0) > tol::kUnit) {
        throw Error(ErrorCode::NotUnit, "plane axes must be unit pure quaternions");
    }
    const Quaternion pp = Quaternion::pure(p);
    const Quaternion qq = Quaternion::pure(q);

    // |1 + pq| = |p - q| and |1 - pq| = |p + q| for unit pure p, q.
    const double minus = norm(p - q);
    const double plus = norm(p + q);
    if (minus > tol::kAxis && plus > tol::kAxis) {
        const Quaternion pq = mul(pp, qq);
        return {Plane::from_span(pp - qq, kOne + pq), Plane::from_span(pp + qq, kOne - pq), PlaneBranch::Generic};
    }
    return {Plane{kOne, pp}, pure_complement(p), minus <= tol::kAxis ? PlaneBranch::Parallel : PlaneBranch::AntiParallel};
}

TurningPlanes turning_planes(const Rotation4& r) {
    if (is_real_unit(r.a()) || is_real_unit(r.b())) {
        throw Error(ErrorCode::DegenerateAxis, "isoclinic rotation has no unique invariant planes");
    }
    const PolarForm pa = polar(r.a());
    const PolarForm pb = polar(r.b());
    const InvariantPlanes ip = invariant_planes(pa.axis, pb.axis);

    TurningPlanes out;
    out.sum_angle = reduce_angle(pa.half_angle + pb.half_angle);
    out.diff_angle = reduce_angle(pa.half_angle - pb.half_angle);
    switch (ip.branch) {
        case PlaneBranch::Generic:
        case PlaneBranch::AntiParallel:
            out.diff_plane = ip.first;
            out.sum_plane = ip.second;
            break;
        case PlaneBranch::Parallel:
            out.sum_plane = ip.first;
            out.diff_plane = ip.second;
            break;
    }
    out.sum_plane = oriented(r, out.sum_plane, out.sum_angle);
    out.diff_plane = oriented(r, out.diff_plane, out.diff_angle);
    return out;
}

RotationKind classify(const Rotation4& r, double eps) {
    require_unit(r);
    const Quaternion& a = r.a();
    const Quaternion& b = r.b();
    const bool a_real = is_real_unit(a);
    const bool b_real = is_real_unit(b);

    if (a_real && b_real) {
        if (a.s * b.s > 0.0) return kind::Identity{};
        // x -> -x; no preferred side, reported as a left translation.
        return kind::LeftIsoclinic{kPi};
    }
    if (a_real) {
        // x -> x (sign(a) b)
        return kind::RightIsoclinic{std::atan2(norm(b.v), std::copysign(1.0, a.s) * b.s)};
    }
    if (b_real) {
        return kind::LeftIsoclinic{std::atan2(norm(a.v), std::copysign(1.0, b.s) * a.s)};
    }

    const TurningPlanes tp = turning_planes(r);
    if (std::abs(a.s - b.s) <= eps) {
        return kind::Simple{tp.sum_angle, tp.diff_plane, tp.sum_plane};
    }
    return kind::Double{tp.sum_plane, tp.sum_angle, tp.diff_plane, tp.diff_angle};
}

Matrix4 to_matrix(const Rotation4& r) {
    return oracle::left_mult_matrix(r.a()) * oracle::right_mult_matrix(r.b());
}

std::pair<ReflectionNormal, ReflectionNormal> simple_to_reflections(const Rotation4& r, double eps) {
    require_unit(r);
    if (std::abs(r.a().s - r.b().s) > eps) {
        throw Error(ErrorCode::NotSimple, "rotation is not simple (Sa != Sb)");
    }
    // y with a y = y b; the kernel of x -> a x - x b is two-dimensional for a
    // simple rotation, so at most two pivots are taken.
    const Matrix4 m = oracle::left_mult_matrix(r.a()) - oracle::right_mult_matrix(r.b());
    const Elimination e = eliminate(m, tol::kPivot, 2);

    Quaternion best = e.kernel.front();
    double best_mag = -1.0;
    for (const Quaternion& k : e.kernel) {
        double mag = 0.0;
        for (int c = 0; c < 4; ++c) mag = std::max(mag, std::abs(k[c]));
        if (mag > best_mag) {
            best_mag = mag;
            best = k;
        }
    }
    const Quaternion y = normalized(best);
    return {ReflectionNormal{y}, ReflectionNormal{normalized(mul(r.a(), y))}};
}

}  // namespace rot4
