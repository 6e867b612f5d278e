#include "rot4/random.hpp"

#include <cmath>
#include <variant>

namespace rot4 {

std::optional<SampleKind> parse_sample_kind(std::string_view name) {
    if (name == "any") return SampleKind::Any;
    if (name == "simple") return SampleKind::Simple;
    if (name == "double") return SampleKind::Double;
    if (name == "left-isoclinic") return SampleKind::LeftIsoclinic;
    if (name == "right-isoclinic") return SampleKind::RightIsoclinic;
    return std::nullopt;
}

std::string_view to_string(SampleKind kind) {
    switch (kind) {
        case SampleKind::Any: return "any";
        case SampleKind::Simple: return "simple";
        case SampleKind::Double: return "double";
        case SampleKind::LeftIsoclinic: return "left-isoclinic";
        case SampleKind::RightIsoclinic: return "right-isoclinic";
    }
    return "any";
}

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

Quaternion Sampler::unit_quaternion() {
    for (;;) {
        const Quaternion g{gaussian(), gaussian(), gaussian(), gaussian()};
        const double n = norm(g);
        if (n > 1e-6) return g / n;
    }
}

Vec3 Sampler::unit_vec3() {
    for (;;) {
        const Vec3 g = gaussian_vec3();
        const double n = norm(g);
        if (n > 1e-6) return g / n;
    }
}

Vec3 Sampler::gaussian_vec3(double scale) { return Vec3{gaussian(), gaussian(), gaussian()} * scale; }

Rotation4 Sampler::rotation(SampleKind kind) {
    switch (kind) {
        case SampleKind::Any: return any_rotation();
        case SampleKind::Simple: return simple_rotation();
        case SampleKind::Double: return double_rotation();
        case SampleKind::LeftIsoclinic: return left_isoclinic();
        case SampleKind::RightIsoclinic: return right_isoclinic();
    }
    return any_rotation();
}

Rotation4 Sampler::any_rotation() {
    const Quaternion a = unit_quaternion();
    const Quaternion b = unit_quaternion();
    return {a, b};
}

Rotation4 Sampler::simple_rotation() {
    const ReflectionNormal y{unit_quaternion()};
    const ReflectionNormal z{unit_quaternion()};
    return from_reflections(y, z);
}

Rotation4 Sampler::double_rotation() {
    for (;;) {
        const Rotation4 r = any_rotation();
        if (std::holds_alternative<kind::Double>(classify(r))) return r;
    }
}

Rotation4 Sampler::left_isoclinic() {
    Quaternion a = unit_quaternion();
    // Keep b = +1 in the stored (canonical) pair.
    for (int c = 0; c < 4; ++c) {
        if (std::abs(a[c]) > tol::kAxis) {
            if (a[c] < 0.0) a = -a;
            break;
        }
    }
    return {a, kOne};
}

Rotation4 Sampler::right_isoclinic() { return {kOne, unit_quaternion()}; }

}  // namespace rot4
