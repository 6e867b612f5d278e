#pragma once

/**
 * Composition of rotations and propagation of their geometric parameters.
 *
 * Order convention: compose(g, f) is "f followed by g". With f = (a, b) and
 * g = (c, d) the composite acts as x -> (c a) x (b d).
 *
 * In the Gibbs chart a rotation is cos(alpha)(1 + p~) x (1 + q~) cos(beta)
 * with p~ = p tan(alpha), q~ = q tan(beta). The chart is singular where a
 * cosine vanishes; there the quaternion-level compose() still works and only
 * the Gibbs-level functions report GibbsSingular.
 */

#include "rot4/plane.hpp"
#include "rot4/quaternion.hpp"
#include "rot4/rotation4.hpp"

namespace rot4 {

/// f followed by g.
[[nodiscard]] Rotation4 compose(const Rotation4& g, const Rotation4& f);

struct GibbsPair {
    Vec3 p_tilde;
    Vec3 q_tilde;
    double cos_alpha = 1.0;
    double cos_beta = 1.0;

    /// Throws GibbsSingular when Sa or Sb vanishes.
    [[nodiscard]] static GibbsPair from_rotation(const Rotation4& r);

    /// (cos_alpha (1 + p~), cos_beta (1 + q~)); throws NotUnit when the
    /// cosines do not match the Gibbs vectors.
    [[nodiscard]] Rotation4 to_rotation() const;

    /// cos^2 (1 + |g|^2) = 1 on both sides, to eps.
    [[nodiscard]] bool is_consistent(double eps = tol::kUnit) const;
};

/// Max-abs componentwise distance; the cosines are compared modulo their
/// joint sign, which is the (a, b) ~ (-a, -b) freedom.
[[nodiscard]] double gibbs_distance(const GibbsPair& x, const GibbsPair& y);

/// Gibbs parameters of g after f:
///   cos a = cos a1 cos a2 (1 - p1.p2),   p~ = (p2 + p1 + p2 x p1) / (1 - p2.p1)
///   cos b = cos b1 cos b2 (1 - q1.q2),   q~ = (q1 + q2 + q1 x q2) / (1 - q1.q2)
/// Throws GibbsSingular if an input cosine or either denominator vanishes.
[[nodiscard]] GibbsPair compose_gibbs(const GibbsPair& f, const GibbsPair& g);

struct CliffordGibbs {
    Vec3 gibbs;
    double cos = 1.0;
};

/// Left Clifford translations x -> a x (a = cos1 (1 + g1)) then x -> b x
/// (b = cos2 (1 + g2)); returns the parameters of b a.
[[nodiscard]] CliffordGibbs compose_left_clifford(const Vec3& g1, double cos1, const Vec3& g2, double cos2);

struct ComposedPlanes {
    Plane plane1;  // turned through alpha + beta
    double angle1 = 0.0;
    Plane plane2;  // turned through alpha - beta
    double angle2 = 0.0;
};

/// Invariant planes and angles of the rotation carried by a Gibbs pair.
/// Throws DegenerateAxis when p~ or q~ vanishes (planes not unique).
[[nodiscard]] ComposedPlanes composed_planes_from_gibbs(const GibbsPair& h);

inline constexpr double kSimplicityEps = 1e-8;

struct SimplicityReport {
    // Vc.Va - Vb.Vd for f = (a, b), g = (c, d)
    double s_condition = 0.0;
    // det[y, z, u, w] of the reflection normals (columns, scalar component first)
    double det_normals = 0.0;
    // dim of the intersection of the two fixed planes: 4 - rank[y; z; u; w]
    int intersection_dim = 0;
    // |s_condition| <= eps
    bool is_simple = false;
    bool det_says_simple = false;
    bool intersection_says_simple = false;

    [[nodiscard]] bool tests_agree() const {
        return is_simple == det_says_simple && is_simple == intersection_says_simple;
    }
};

/// Whether g after f is again simple, decided three ways. Throws NotSimple
/// when f or g is not simple (identity is accepted).
[[nodiscard]] SimplicityReport is_composition_simple(const Rotation4& f, const Rotation4& g,
                                                     double eps = kSimplicityEps);

}  // namespace rot4
