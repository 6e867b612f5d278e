#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rot4/plane.hpp"
#include "rot4/quaternion.hpp"
#include "rot4/rotation4.hpp"

namespace rot4::cli {

using Json = nlohmann::ordered_json;

// Stable process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitDiscrepancy = 1,
    kExitMalformed = 2,
    kExitNonUnit = 3,
};

/// Failure that maps directly onto a process exit code.
class CliError : public std::runtime_error {
public:
    CliError(int exit_code, const std::string& what) : std::runtime_error(what), exit_code_(exit_code) {}
    [[nodiscard]] int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

/// {"a":[s,x1,x2,x3],"b":[s,x1,x2,x3]}
struct RotationDoc {
    std::array<double, 4> a{1.0, 0.0, 0.0, 0.0};
    std::array<double, 4> b{1.0, 0.0, 0.0, 0.0};

    friend bool operator==(const RotationDoc&, const RotationDoc&) = default;
};

/// Throws CliError(kExitMalformed) unless `j` is an object with two
/// length-4 numeric arrays "a" and "b". Extra keys are ignored.
[[nodiscard]] RotationDoc parse_doc(const Json& j);

[[nodiscard]] Json to_json(const RotationDoc& doc);
[[nodiscard]] RotationDoc to_doc(const Rotation4& r);

/// Throws CliError(kExitNonUnit) when a factor is off the unit sphere by
/// more than tol::kUnit and `normalize` is false.
[[nodiscard]] Rotation4 to_rotation(const RotationDoc& doc, bool normalize);

[[nodiscard]] Json quaternion_json(const Quaternion& q);
[[nodiscard]] Json plane_json(const Plane& p);
[[nodiscard]] Json matrix_json(const Matrix4& m);

/// Compact single-line JSON; floating-point numbers use 17 significant digits.
void write_json(std::ostream& out, const Json& j);
[[nodiscard]] std::string dump_json(const Json& j);

/// Reads every JSON value in the stream (one document, JSON lines, or
/// concatenated values). Throws CliError(kExitMalformed) on a parse error.
[[nodiscard]] std::vector<Json> read_json_values(std::istream& in);

/// Expands arrays of documents; every other value is kept as is.
[[nodiscard]] std::vector<RotationDoc> collect_docs(const std::vector<Json>& values);

/// Human-readable number, 6 significant digits.
[[nodiscard]] std::string fmt6(double x);

/// e.g. "0.707107 + 0.707107k"
[[nodiscard]] std::string quaternion_text(const Quaternion& q);

[[nodiscard]] std::string plane_text(const Plane& p);

}  // namespace rot4::cli
