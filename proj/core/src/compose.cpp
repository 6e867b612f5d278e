#include "rot4/compose.hpp"

#include <algorithm>
#include <cmath>

#include "rot4/error.hpp"
#include "rot4/linalg.hpp"
#include "rot4/matrix4.hpp"

namespace rot4 {

Rotation4 compose(const Rotation4& g, const Rotation4& f) {
    return {mul(g.a(), f.a()), mul(f.b(), g.b())};
}

GibbsPair GibbsPair::from_rotation(const Rotation4& r) {
    return {gibbs_from_unit(r.a()), gibbs_from_unit(r.b()), r.a().s, r.b().s};
}

Rotation4 GibbsPair::to_rotation() const {
    return {cos_alpha * Quaternion(1.0, p_tilde), cos_beta * Quaternion(1.0, q_tilde)};
}

bool GibbsPair::is_consistent(double eps) const {
    return std::abs(cos_alpha * cos_alpha * (1.0 + dot(p_tilde, p_tilde)) - 1.0) <= eps &&
           std::abs(cos_beta * cos_beta * (1.0 + dot(q_tilde, q_tilde)) - 1.0) <= eps;
}

double gibbs_distance(const GibbsPair& x, const GibbsPair& y) {
    const auto vdiff = [](const Vec3& l, const Vec3& r) {
        return std::max({std::abs(l.x1 - r.x1), std::abs(l.x2 - r.x2), std::abs(l.x3 - r.x3)});
    };
    const double cos_same = std::max(std::abs(x.cos_alpha - y.cos_alpha), std::abs(x.cos_beta - y.cos_beta));
    const double cos_flip = std::max(std::abs(x.cos_alpha + y.cos_alpha), std::abs(x.cos_beta + y.cos_beta));
    return std::max({vdiff(x.p_tilde, y.p_tilde), vdiff(x.q_tilde, y.q_tilde), std::min(cos_same, cos_flip)});
}

GibbsPair compose_gibbs(const GibbsPair& f, const GibbsPair& g) {
    for (double c : {f.cos_alpha, f.cos_beta, g.cos_alpha, g.cos_beta}) {
        if (std::abs(c) <= tol::kGibbs) {
            throw Error(ErrorCode::GibbsSingular, "input rotation has a vanishing Gibbs cosine");
        }
    }
    const Vec3& p1 = f.p_tilde;
    const Vec3& p2 = g.p_tilde;
    const Vec3& q1 = f.q_tilde;
    const Vec3& q2 = g.q_tilde;

    const double left_den = 1.0 - dot(p2, p1);
    const double right_den = 1.0 - dot(q1, q2);
    if (std::abs(left_den) <= tol::kGibbs) {
        throw Error(ErrorCode::GibbsSingular, "composed left factor has cos(alpha) = 0");
    }
    if (std::abs(right_den) <= tol::kGibbs) {
        throw Error(ErrorCode::GibbsSingular, "composed right factor has cos(beta) = 0");
    }

    GibbsPair h;
    h.cos_alpha = f.cos_alpha * g.cos_alpha * left_den;
    h.p_tilde = (p2 + p1 + cross(p2, p1)) / left_den;
    h.cos_beta = f.cos_beta * g.cos_beta * right_den;
    h.q_tilde = (q1 + q2 + cross(q1, q2)) / right_den;
    return h;
}

CliffordGibbs compose_left_clifford(const Vec3& g1, double cos1, const Vec3& g2, double cos2) {
    const double den = 1.0 - dot(g1, g2);
    if (std::abs(den) <= tol::kGibbs) {
        throw Error(ErrorCode::GibbsSingular, "composed translation has cos(alpha) = 0");
    }
    return {(g1 + g2 + cross(g2, g1)) / den, cos1 * cos2 * den};
}

ComposedPlanes composed_planes_from_gibbs(const GibbsPair& h) {
    if (norm(h.p_tilde) <= tol::kAxis || norm(h.q_tilde) <= tol::kAxis) {
        throw Error(ErrorCode::DegenerateAxis, "zero Gibbs vector: isoclinic rotation, planes not unique");
    }
    const TurningPlanes tp = turning_planes(h.to_rotation());
    return {tp.sum_plane, tp.sum_angle, tp.diff_plane, tp.diff_angle};
}

SimplicityReport is_composition_simple(const Rotation4& f, const Rotation4& g, double eps) {
    const auto [y, z] = simple_to_reflections(f);
    const auto [u, w] = simple_to_reflections(g);

    const Quaternion& a = f.a();
    const Quaternion& b = f.b();
    const Quaternion& c = g.a();
    const Quaternion& d = g.b();

    SimplicityReport rep;
    rep.s_condition = dot(c.v, a.v) - dot(b.v, d.v);
    rep.det_normals = det(Matrix4::from_columns({y.y(), z.y(), u.y(), w.y()}));
    rep.intersection_dim = 4 - rank(Matrix4::from_rows({y.y(), z.y(), u.y(), w.y()}), tol::kPivot);

    rep.is_simple = std::abs(rep.s_condition) <= eps;
    // s_condition = 2 det_normals
    rep.det_says_simple = std::abs(2.0 * rep.det_normals) <= eps;
    rep.intersection_says_simple = rep.intersection_dim >= 1;
    return rep;
}

}  // namespace rot4
