#pragma once

#include "rot4/matrix4.hpp"
#include "rot4/quaternion.hpp"

namespace rot4 {

/// Oriented 2D subspace of E^4 stored as an orthonormal pair (u, w).
///
/// Two planes are the same subspace iff their projectors u u^T + w w^T agree;
/// the basis and orientation are extra information used to sign in-plane
/// rotation angles.
struct Plane {
    Quaternion u;
    Quaternion w;

    /// Gram-Schmidt on (first, second), first vector first. Throws
    /// DegenerateAxis when the two vectors are (numerically) dependent.
    [[nodiscard]] static Plane from_span(const Quaternion& first, const Quaternion& second);

    [[nodiscard]] Matrix4 projector() const;

    /// Orthogonal projection of x onto the plane.
    [[nodiscard]] Quaternion project(const Quaternion& x) const;

    /// |x - P x|, the distance of x from the plane.
    [[nodiscard]] double residual(const Quaternion& x) const;

    [[nodiscard]] Plane flipped() const { return {u, -w}; }
};

[[nodiscard]] double projector_distance(const Plane& a, const Plane& b);

[[nodiscard]] bool same_plane(const Plane& a, const Plane& b, double eps);

/// Largest |dot4| between a basis vector of `a` and one of `b`.
[[nodiscard]] double max_cross_dot(const Plane& a, const Plane& b);

}  // namespace rot4

namespace rot4 {

/// Orthonormal basis of the orthogonal complement of `p`, built by projecting
/// the coordinate axes out of p and keeping the two best-conditioned residuals.
[[nodiscard]] Plane orthogonal_complement(const Plane& p);

}  // namespace rot4
