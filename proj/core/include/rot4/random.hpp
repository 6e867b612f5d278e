#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "rot4/quaternion.hpp"
#include "rot4/rotation4.hpp"

namespace rot4 {

enum class SampleKind { Any, Simple, Double, LeftIsoclinic, RightIsoclinic };

[[nodiscard]] std::optional<SampleKind> parse_sample_kind(std::string_view name);
[[nodiscard]] std::string_view to_string(SampleKind kind);

/// Seeded generator of random quaternions and rotations. Identical seeds give
/// identical streams on a given standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    [[nodiscard]] double uniform(double lo, double hi);
    [[nodiscard]] double gaussian() { return normal_(rng_); }

    /// Uniform on S^3 via a normalized 4D Gaussian.
    [[nodiscard]] Quaternion unit_quaternion();
    /// Uniform on S^2.
    [[nodiscard]] Vec3 unit_vec3();
    [[nodiscard]] Vec3 gaussian_vec3(double scale = 1.0);

    [[nodiscard]] Rotation4 rotation(SampleKind kind);
    [[nodiscard]] Rotation4 any_rotation();
    /// Product of reflections in two random hyperplanes.
    [[nodiscard]] Rotation4 simple_rotation();
    [[nodiscard]] Rotation4 double_rotation();
    [[nodiscard]] Rotation4 left_isoclinic();
    [[nodiscard]] Rotation4 right_isoclinic();

    [[nodiscard]] std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace rot4
