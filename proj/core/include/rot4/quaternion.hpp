#pragma once

/**
 * Quaternion arithmetic over doubles.
 *
 * A quaternion x = s + x1 i + x2 j + x3 k is stored as a scalar part and a
 * 3-vector part. Components are always ordered scalar first, which is also
 * the coordinate order of the 4-vectors used by every matrix in the library.
 *
 * Besides the algebra this header carries the two charts used for unit
 * quaternions: the polar form cos(t) + p sin(t) and the Gibbs vector
 * p tan(t), together with the 3D Rodrigues composition rule.
 */

#include <array>
#include <cmath>

namespace rot4 {

struct Vec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double a, double b, double c) : x1(a), x2(b), x3(c) {}

    /// Rejects NaN/Inf components with ErrorCode::NonFinite.
    [[nodiscard]] static Vec3 checked(double a, double b, double c);

    constexpr Vec3& operator+=(const Vec3& o) {
        x1 += o.x1;
        x2 += o.x2;
        x3 += o.x3;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x1 -= o.x1;
        x2 -= o.x2;
        x3 -= o.x3;
        return *this;
    }
    constexpr Vec3& operator*=(double k) {
        x1 *= k;
        x2 *= k;
        x3 *= k;
        return *this;
    }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x1, -a.x2, -a.x3}; }
    friend constexpr Vec3 operator*(Vec3 a, double k) { return a *= k; }
    friend constexpr Vec3 operator*(double k, Vec3 a) { return a *= k; }
    friend constexpr Vec3 operator/(const Vec3& a, double k) { return {a.x1 / k, a.x2 / k, a.x3 / k}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

[[nodiscard]] constexpr double dot(const Vec3& a, const Vec3& b) {
    return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

[[nodiscard]] constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

[[nodiscard]] inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct Quaternion {
    double s = 0.0;  // scalar part Sx
    Vec3 v;          // vector part Vx

    constexpr Quaternion() = default;
    constexpr Quaternion(double scalar) : s(scalar) {}  // NOLINT: reals embed in H
    constexpr Quaternion(double scalar, const Vec3& vec) : s(scalar), v(vec) {}
    constexpr Quaternion(double x0, double x1, double x2, double x3) : s(x0), v(x1, x2, x3) {}

    /// Pure quaternion with zero scalar part.
    [[nodiscard]] static constexpr Quaternion pure(const Vec3& vec) { return {0.0, vec}; }

    /// Rejects NaN/Inf components with ErrorCode::NonFinite.
    [[nodiscard]] static Quaternion checked(const std::array<double, 4>& c);

    [[nodiscard]] constexpr std::array<double, 4> components() const { return {s, v.x1, v.x2, v.x3}; }
    [[nodiscard]] static constexpr Quaternion from_components(const std::array<double, 4>& c) {
        return {c[0], c[1], c[2], c[3]};
    }
    [[nodiscard]] constexpr double operator[](int idx) const {
        switch (idx) {
            case 0: return s;
            case 1: return v.x1;
            case 2: return v.x2;
            default: return v.x3;
        }
    }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        s += o.s;
        v += o.v;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        s -= o.s;
        v -= o.v;
        return *this;
    }
    constexpr Quaternion& operator*=(double k) {
        s *= k;
        v *= k;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.s, -a.v}; }
    friend constexpr Quaternion operator*(Quaternion a, double k) { return a *= k; }
    friend constexpr Quaternion operator*(double k, Quaternion a) { return a *= k; }
    friend constexpr Quaternion operator/(const Quaternion& a, double k) { return {a.s / k, a.v / k}; }
    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

/// xy = SxSy - Vx.Vy + SxVy + SyVx + Vx x Vy
[[nodiscard]] constexpr Quaternion mul(const Quaternion& x, const Quaternion& y) {
    return {x.s * y.s - dot(x.v, y.v), x.s * y.v + y.s * x.v + cross(x.v, y.v)};
}

[[nodiscard]] constexpr Quaternion operator*(const Quaternion& x, const Quaternion& y) { return mul(x, y); }

[[nodiscard]] constexpr Quaternion conj(const Quaternion& x) { return {x.s, -x.v}; }

[[nodiscard]] constexpr double norm_sq(const Quaternion& x) { return x.s * x.s + dot(x.v, x.v); }

[[nodiscard]] inline double norm(const Quaternion& x) { return std::sqrt(norm_sq(x)); }

/// Euclidean scalar product on H = E^4, equal to S(x conj(y)).
[[nodiscard]] constexpr double dot4(const Quaternion& x, const Quaternion& y) { return x.s * y.s + dot(x.v, y.v); }

[[nodiscard]] Quaternion normalized(const Quaternion& x);

[[nodiscard]] inline bool is_unit(const Quaternion& x, double eps) { return std::abs(norm_sq(x) - 1.0) <= eps; }

/// Max-abs componentwise distance.
[[nodiscard]] double max_abs_diff(const Quaternion& x, const Quaternion& y);

/// Distance modulo a global sign: min over +y and -y.
[[nodiscard]] double max_abs_diff_up_to_sign(const Quaternion& x, const Quaternion& y);

/// a = cos(half_angle) + axis sin(half_angle).
struct PolarForm {
    double half_angle = 0.0;
    Vec3 axis{1.0, 0.0, 0.0};
    // Set for a = +-1, where the axis is undefined and reported as i.
    bool axis_degenerate = false;

    [[nodiscard]] Quaternion reconstruct() const;
};

/// Polar form of a unit quaternion. Throws NotUnit when |N(a) - 1| > tol::kUnit.
[[nodiscard]] PolarForm polar(const Quaternion& a);

/// Gibbs vector Va / Sa. Throws GibbsSingular when |Sa| <= tol::kGibbs.
[[nodiscard]] Vec3 gibbs_from_unit(const Quaternion& a);

/// (1 + g) / sqrt(1 + |g|^2); the scalar part is always positive.
[[nodiscard]] Quaternion unit_from_gibbs(const Vec3& g);

/// Gibbs vector of the 3D rotation g1 followed by g2:
/// (g2 + g1 + g2 x g1) / (1 - g2.g1). Throws GibbsSingular on a vanishing denominator.
[[nodiscard]] Vec3 rodrigues_compose(const Vec3& g1, const Vec3& g2);

}  // namespace rot4
