#pragma once

/**
 * Rotations of E^4 in the form x -> a x b with unit quaternions a, b.
 *
 * The pair (a, b) and (-a, -b) act identically; Rotation4 always stores the
 * representative whose first non-negligible component of `a` is positive.
 *
 * Classification follows the three geometric types: a Clifford
 * (isoclinic) translation when one factor is +-1, a simple rotation when
 * Sa = Sb, and a double rotation otherwise. With polar forms
 * a = cos(alpha) + p sin(alpha) and b = cos(beta) + q sin(beta), the plane
 * Sp{p + q, 1 - pq} turns through alpha + beta and Sp{p - q, 1 + pq} through
 * alpha - beta. When q = +-p those spans collapse and Sp{1, p} together with
 * its orthogonal complement take their place.
 */

#include <string_view>
#include <utility>
#include <variant>

#include "rot4/matrix4.hpp"
#include "rot4/plane.hpp"
#include "rot4/quaternion.hpp"
#include "rot4/tolerances.hpp"

namespace rot4 {

class Rotation4 {
public:
    /// Identity rotation.
    constexpr Rotation4() : a_(kOne), b_(kOne) {}

    /// Throws NotUnit unless both factors are unit to tol::kUnit; stores the
    /// canonical sign representative.
    Rotation4(const Quaternion& a, const Quaternion& b);

    [[nodiscard]] static constexpr Rotation4 identity() { return {}; }

    [[nodiscard]] constexpr const Quaternion& a() const { return a_; }
    [[nodiscard]] constexpr const Quaternion& b() const { return b_; }

    friend constexpr bool operator==(const Rotation4&, const Rotation4&) = default;

private:
    Quaternion a_;
    Quaternion b_;
};

/// Max-abs distance between the factor pairs, modulo the joint sign flip.
[[nodiscard]] double factor_distance(const Rotation4& r1, const Rotation4& r2);

/// Unit normal of a reflecting hyperplane. Throws NotUnit on construction
/// from a non-unit quaternion.
class ReflectionNormal {
public:
    explicit ReflectionNormal(const Quaternion& y);

    [[nodiscard]] constexpr const Quaternion& y() const { return y_; }

private:
    Quaternion y_;
};

namespace kind {

struct Identity {};

struct Simple {
    double angle = 0.0;  // (0, pi]
    Plane fixed_plane;
    Plane rotation_plane;  // oriented so the turn from u towards w is positive
};

struct LeftIsoclinic {
    double angle = 0.0;
};

struct RightIsoclinic {
    double angle = 0.0;
};

struct Double {
    Plane plane1;  // turned through alpha + beta
    double angle1 = 0.0;
    Plane plane2;  // turned through alpha - beta
    double angle2 = 0.0;
};

}  // namespace kind

using RotationKind = std::variant<kind::Identity, kind::Simple, kind::LeftIsoclinic, kind::RightIsoclinic, kind::Double>;

[[nodiscard]] std::string_view kind_name(const RotationKind& k);

/// x -> a x b
[[nodiscard]] Quaternion apply(const Rotation4& r, const Quaternion& x);

/// x -> -y conj(x) y, the reflection in the hyperplane with normal y.
[[nodiscard]] Quaternion reflect(const ReflectionNormal& y, const Quaternion& x);

/// R_z after R_y: a = z conj(y), b = conj(y) z.
[[nodiscard]] Rotation4 from_reflections(const ReflectionNormal& y, const ReflectionNormal& z);

/// Throws NotUnit when either factor has drifted off the unit sphere.
[[nodiscard]] RotationKind classify(const Rotation4& r, double eps = tol::kClassify);

enum class PlaneBranch {
    Generic,       // first = Sp{p - q, 1 + pq}, second = Sp{p + q, 1 - pq}
    Parallel,      // q = p:  first = Sp{1, p}, second = its complement
    AntiParallel,  // q = -p: first = Sp{1, p}, second = its complement
};

struct InvariantPlanes {
    Plane first;
    Plane second;
    PlaneBranch branch = PlaneBranch::Generic;
};

/// Invariant planes of x -> (cos a + p sin a) x (cos b + q sin b) for unit
/// pure p, q. Throws NotUnit if |p| or |q| is not 1.
[[nodiscard]] InvariantPlanes invariant_planes(const Vec3& p, const Vec3& q);

struct TurningPlanes {
    Plane sum_plane;  // turned through alpha + beta
    double sum_angle = 0.0;
    Plane diff_plane;  // turned through alpha - beta
    double diff_angle = 0.0;
};

/// Both invariant planes with their unsigned angles, each rotating plane
/// oriented so that its turn is counterclockwise from u to w. Throws
/// DegenerateAxis when a or b is +-1 (isoclinic: planes are not unique).
[[nodiscard]] TurningPlanes turning_planes(const Rotation4& r);

/// L(a) R(b); M vec(x) = vec(a x b).
[[nodiscard]] Matrix4 to_matrix(const Rotation4& r);

/// Splits a simple rotation into two reflections (y, z) with z conj(y) = a
/// and conj(y) z = b. Throws NotSimple when |Sa - Sb| > eps.
[[nodiscard]] std::pair<ReflectionNormal, ReflectionNormal> simple_to_reflections(const Rotation4& r,
                                                                                  double eps = tol::kClassify);

/// Folds an angle into [0, pi] (unsigned turning angle).
[[nodiscard]] double reduce_angle(double theta);

}  // namespace rot4
